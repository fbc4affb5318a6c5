#include "ashom/normal_homology.hpp"

#include <algorithm>

namespace ashom {
namespace {

std::string relabel(std::string s) {
  auto replace = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  };
  replace("(C'')", "(A)");
  replace("(C')", "(X)");
  replace("(C)", "(X,A)");
  return s;
}

Presentation power(const FGAbelianGroup& G, std::size_t k) {
  Presentation one = Presentation::of(G);
  Presentation out = Presentation::free(0);
  for (std::size_t j = 0; j < k; ++j) out = direct_sum(out, one);
  return out;
}

}  // namespace

IntegerCochainComplex normal_cochain_complex(const FiniteCoveredSpace& S, const Covering& alpha, int max_degree) {
  S.validate();
  return simplicial_cochain_complex(vietoris_complex(S.points, alpha), max_degree);
}

IntegerCochainComplex normal_cochain_complex(const FiniteCoveredSpace& S, const CoveringPair& p, int max_degree) {
  S.validate();
  return relative_cochain_complex(S, p, max_degree);
}

HomologyResult homology(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n,
                        const SaturationOptions& options) {
  ConeComplex K = dualize(C, resolve_injective(G));
  ConeHomologyResult r = cone_homology_report(K, n, options);
  return HomologyResult{n, r.group, G, r.moduli};
}

std::vector<HomologyResult> homology_window(const IntegerCochainComplex& C, const FGAbelianGroup& G,
                                            const SaturationOptions& options) {
  std::vector<HomologyResult> out;
  for (int n = C.lo() - 1; n <= C.hi() + 1; ++n) out.push_back(homology(C, G, n, options));
  return out;
}

FGAbelianGroup ucf_prediction(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n) {
  return hom(C.cohomology(n), G) + ext(C.cohomology(n + 1), G);
}

UCFReport ucf_check(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n, const SaturationOptions& options) {
  UCFReport rep;
  rep.degree = n;
  FGAbelianGroup Hn = C.cohomology(n), Hn1 = C.cohomology(n + 1);
  rep.hom_part = hom(Hn, G);
  rep.ext_part = ext(Hn1, G);

  InjectiveResolution R = resolve_injective(G);
  ConeComplex K = dualize(C, R);
  ConeHomologyResult h = cone_homology_report(K, n, options);
  rep.homology_group = h.group;

  const Integer& N = h.moduli.front();
  PresentedChainComplex stage = K.stage(N);
  HomologyData hd = homology(stage, n);
  ResolutionStage rs = R.stage(N);
  IntegerSolver to_base(hstack(rs.alpha, rs.prime.relations()));

  const std::size_t p = R.prime_size(), g = G.generator_count(), r = C.rank(n);
  IntegerMatrix Z = C.cocycle_basis(n);
  const std::size_t k = Z.cols();

  // rho on each cycle generator: phi' evaluated on each cocycle, pulled back
  // from G'_N to G.
  IntegerMatrix rho(k * g, hd.cycles.basis.cols());
  for (std::size_t col = 0; col < hd.cycles.basis.cols(); ++col) {
    IntegerVector v = hd.cycles.basis.column(col);
    for (std::size_t j = 0; j < k; ++j) {
      IntegerVector value(p);
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t b = 0; b < r; ++b) value[c] += v[c * r + b] * Z(b, j);
      auto x = to_base.solve(value);
      if (!x) throw NoSolution("cone cycle does not evaluate into the base group");
      for (std::size_t i = 0; i < g; ++i) rho(j * g + i, col) = (*x)[i];
    }
  }

  // Hom(H^n; G) inside Hom(Z^n; G) = G^k: maps killing the coboundaries.
  IntegerMatrix D = C.delta(n - 1);
  IntegerMatrix E = k ? coordinates_in_basis(Z, D) : IntegerMatrix(0, D.cols());
  const std::size_t rb = D.cols();
  IntegerMatrix M(rb * g, k * g);
  for (std::size_t l = 0; l < rb; ++l)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < g; ++i) M(l * g + i, j * g + i) = E(j, l);
  Subquotient W = Morphism{power(G, k), power(G, rb), M}.kernel();

  IntegerMatrix coords = W.coordinates(rho);
  Morphism rho_map{hd.cycles.group, W.group, coords};
  rho_map.validate();
  rep.rho_image = rho_map.image().group.canonical();
  rep.rho_kernel = rho_map.kernel().group.canonical();
  rep.rho_surjective = rho_map.is_surjective() && W.group.canonical() == rep.hom_part;
  rep.kernel_iso_to_ext = rep.rho_kernel == rep.ext_part;
  return rep;
}

LongExactSequenceReport pair_sequence_check(const FiniteCoveredSpace& S, const CoveringPair& p,
                                            const FGAbelianGroup& G, const SaturationOptions& options) {
  S.validate();
  PairSequence ps = pair_cochain_sequence(S, p);
  LongExactSequenceReport r = connecting_sequence(ps.inclusion.map, ps.restriction.map, resolve_injective(G), options);
  for (auto& t : r.terms) t.label = relabel(t.label);
  return r;
}

DimensionReport dimension_check(const FGAbelianGroup& G, const SaturationOptions& options) {
  IntegerCochainComplex point(0, {1}, {});
  DimensionReport rep;
  rep.coefficient = G;
  rep.pass = true;
  for (int n = -2; n <= 2; ++n) {
    FGAbelianGroup h = homology(point, G, n, options).group;
    rep.values.emplace_back(n, h);
    if (!(n == 0 ? h == G : h.is_trivial())) rep.pass = false;
  }
  return rep;
}

bool HomotopyReport::pass() const {
  return cone_identity && std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

HomotopyReport homotopy_axiom_check(const CochainMap& f, const CochainMap& g, const CochainHomotopy& D,
                                    const FGAbelianGroup& G, const SaturationOptions& options) {
  InjectiveResolution R = resolve_injective(G);
  ConeComplex Ks = dualize(*f.source, R);
  ConeComplex Kt = dualize(*f.target, R);
  HomotopyReport rep;
  ConeHomotopy lifted = homotopy_lift(f, g, D, Kt, Ks);
  ConeChainMap fc = induced_cone_map(f, Kt, Ks);
  ConeChainMap gc = induced_cone_map(g, Kt, Ks);
  rep.cone_identity = check_cone_homotopy(fc, gc, lifted);

  Integer N = common_modulus({&Ks, &Kt}, options);
  PresentedChainComplex Ss = Ks.stage(N), St = Kt.stage(N);
  PresentedChainMap pf = as_presented(fc, St, Ss), pg = as_presented(gc, St, Ss);
  pf.validate();
  pg.validate();
  for (int n = std::min(Ks.lo(), Kt.lo()); n <= std::max(Ks.hi(), Kt.hi()); ++n) {
    HomologyData ht = homology(St, n), hs = homology(Ss, n);
    IntegerMatrix diff = induced_on_homology(pf, ht, hs) - induced_on_homology(pg, ht, hs);
    rep.degrees.push_back(n);
    rep.equal.push_back(Morphism{ht.cycles.group, hs.cycles.group, diff}.is_zero());
  }
  return rep;
}

IndependenceReport resolution_independence_check(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n,
                                                 const SaturationOptions& options) {
  IndependenceReport rep;
  rep.degree = n;
  InjectiveResolution R = resolve_injective(G);
  std::vector<std::pair<std::string, InjectiveResolution>> variants = {
      {"canonical", R},
      {"reordered", reorder_resolution(R)},
      {"padded", pad_resolution(R)},
      {"padded+reordered", reorder_resolution(pad_resolution(R))},
  };
  for (const auto& [name, res] : variants) {
    rep.variants.push_back(name);
    rep.values.push_back(cone_homology(dualize(C, res), n, options));
  }
  rep.pass = std::all_of(rep.values.begin(), rep.values.end(), [&](const auto& v) { return v == rep.values.front(); });
  return rep;
}

}  // namespace ashom
