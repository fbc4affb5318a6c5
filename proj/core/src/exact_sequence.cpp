#include "ashom/exact_sequence.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ashom {
namespace {

struct Term {
  std::string label;
  Presentation group;
};

bool exact_at(const Presentation& X, const IntegerMatrix& in, const Presentation& W, const IntegerMatrix& out,
              const Presentation& Y) {
  if (X.generators() == 0) return true;
  Morphism f{W, X, in};
  Morphism g{X, Y, out};
  IntegerMatrix ker = g.kernel().basis;
  IntegerMatrix img = hstack(in, X.relations());
  return lattice_contains(ker, img, X.relations()) && lattice_contains(img, ker, X.relations());
}

LongExactSequenceReport assemble(const std::vector<Term>& terms, const std::vector<SequenceMap>& maps) {
  LongExactSequenceReport r;
  for (const auto& t : terms) r.terms.push_back({t.label, t.group.canonical()});
  r.maps = maps;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k == 0 || k + 1 == terms.size()) {
      // Boundary terms are the zero group by construction.
      r.exact.push_back(terms[k].group.is_trivial());
      continue;
    }
    r.exact.push_back(exact_at(terms[k].group, maps[k - 1].matrix, terms[k - 1].group, maps[k].matrix,
                               terms[k + 1].group));
  }
  for (std::size_t k = 0; k < maps.size(); ++k)
    r.maps[k].is_zero = Morphism{terms[k].group, terms[k + 1].group, maps[k].matrix}.is_zero();
  return r;
}

IntegerVector lift(const IntegerMatrix& M, const IntegerMatrix& rel, const IntegerVector& v, int degree) {
  IntegerSolver solver(hstack(M, rel));
  auto x = solver.solve(v);
  if (!x) throw NotExact(degree, "zig-zag lift failed in degree " + std::to_string(degree));
  return IntegerVector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(M.cols()));
}

}  // namespace

bool LongExactSequenceReport::all_exact() const { return failures() == 0; }

std::size_t LongExactSequenceReport::failures() const {
  return static_cast<std::size_t>(std::count(exact.begin(), exact.end(), false));
}

void check_short_exact(const PresentedChainMap& i, const PresentedChainMap& j) {
  if (i.target != j.source) throw NotExact(0, "maps are not composable");
  const auto& A = *i.source;
  const auto& B = *i.target;
  const auto& C = *j.target;
  int lo = std::min({A.lo(), B.lo(), C.lo()});
  int hi = std::max({A.hi(), B.hi(), C.hi()});
  i.validate();
  j.validate();
  for (int n = lo; n <= hi; ++n) {
    Morphism in{A.group(n), B.group(n), i.component(n)};
    Morphism out{B.group(n), C.group(n), j.component(n)};
    if (!in.is_injective()) throw NotExact(n, "first map is not injective in degree " + std::to_string(n));
    if (!out.is_surjective()) throw NotExact(n, "second map is not surjective in degree " + std::to_string(n));
    if (!exact_at(B.group(n), in.matrix, A.group(n), out.matrix, C.group(n)))
      throw NotExact(n, "image differs from kernel in degree " + std::to_string(n));
  }
}

void check_short_exact(const CochainMap& f, const CochainMap& g) {
  if (f.target != g.source && !(*f.target == *g.source)) throw NotExact(0, "maps are not composable");
  f.validate();
  g.validate();
  const auto& C = *f.source;
  const auto& Cp = *f.target;
  const auto& Cpp = *g.target;
  int lo = std::min({C.lo(), Cp.lo(), Cpp.lo()});
  int hi = std::max({C.hi(), Cp.hi(), Cpp.hi()});
  for (int n = lo; n <= hi; ++n) {
    IntegerMatrix a = f.component(n);
    IntegerMatrix b = g.component(n);
    if (matrix_rank(a) != C.rank(n)) throw NotExact(n, "first map is not injective in degree " + std::to_string(n));
    if (!cokernel(b).is_trivial()) throw NotExact(n, "second map is not surjective in degree " + std::to_string(n));
    if (!(b * a).is_zero()) throw NotExact(n, "composite is nonzero in degree " + std::to_string(n));
    if (!lattice_contains(a, kernel_basis(b), IntegerMatrix(Cp.rank(n), 0)))
      throw NotExact(n, "kernel exceeds image in degree " + std::to_string(n));
  }
}

LongExactSequenceReport homology_sequence(const PresentedChainMap& i, const PresentedChainMap& j, const std::string& a,
                                          const std::string& b, const std::string& c) {
  check_short_exact(i, j);
  const auto& A = *i.source;
  const auto& B = *i.target;
  const auto& C = *j.target;
  int lo = std::min({A.lo(), B.lo(), C.lo()});
  int hi = std::max({A.hi(), B.hi(), C.hi()});

  std::map<int, HomologyData> hA, hB, hC;
  for (int n = lo - 1; n <= hi; ++n) hA[n] = homology(A, n);
  for (int n = lo; n <= hi; ++n) {
    hB[n] = homology(B, n);
    hC[n] = homology(C, n);
  }

  std::vector<Term> terms;
  std::vector<SequenceMap> maps;
  terms.push_back({"0", Presentation::free(0)});
  auto name = [](const std::string& s, int n) { return "H_" + std::to_string(n) + "(" + s + ")"; };
  for (int n = hi; n >= lo; --n) {
    const Presentation& ga = hA[n].cycles.group;
    const Presentation& gb = hB[n].cycles.group;
    const Presentation& gc = hC[n].cycles.group;
    std::size_t prev = terms.back().group.generators();
    maps.push_back({n == hi ? "zero" : "connecting", IntegerMatrix(ga.generators(), prev), false});
    if (n != hi) {
      // Connecting map H_{n+1}(C) -> H_n(A) by the zig-zag.
      const HomologyData& top = hC[n + 1];
      IntegerMatrix d(ga.generators(), top.cycles.basis.cols());
      for (std::size_t k = 0; k < top.cycles.basis.cols(); ++k) {
        IntegerVector x = lift(j.component(n + 1), C.group(n + 1).relations(), top.cycles.basis.column(k), n + 1);
        IntegerVector db = B.boundary(n + 1) * x;
        IntegerVector y = lift(i.component(n), B.group(n).relations(), db, n);
        d.set_column(k, hA[n].cycles.coordinates(y));
      }
      maps.back().matrix = d;
    }
    terms.push_back({name(a, n), ga});
    maps.push_back({"i", induced_on_homology(i, hA[n], hB[n]), false});
    terms.push_back({name(b, n), gb});
    maps.push_back({"j", induced_on_homology(j, hB[n], hC[n]), false});
    terms.push_back({name(c, n), gc});
  }
  maps.push_back({"zero", IntegerMatrix(0, terms.back().group.generators()), false});
  terms.push_back({"0", Presentation::free(0)});
  return assemble(terms, maps);
}

Integer common_modulus(const std::vector<const ConeComplex*>& cones, const SaturationOptions& options) {
  Integer N = 1;
  for (const auto* K : cones) N = lcm(N, base_modulus(*K, options));
  return N;
}

LongExactSequenceReport connecting_sequence(const CochainMap& f, const CochainMap& g, const InjectiveResolution& R,
                                            const SaturationOptions& options) {
  check_short_exact(f, g);
  ConeComplex K = dualize(*f.source, R);
  ConeComplex Kp = dualize(*f.target, R);
  ConeComplex Kpp = dualize(*g.target, R);
  ConeChainMap gc = induced_cone_map(g, Kpp, Kp);
  ConeChainMap fc = induced_cone_map(f, Kp, K);
  Integer N = common_modulus({&K, &Kp, &Kpp}, options);
  PresentedChainComplex S = K.stage(N), Sp = Kp.stage(N), Spp = Kpp.stage(N);
  return homology_sequence(as_presented(gc, Spp, Sp), as_presented(fc, Sp, S), "C''", "C'", "C");
}

}  // namespace ashom
