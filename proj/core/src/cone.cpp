#include "ashom/cone.hpp"

#include <string>

namespace ashom {
namespace {

std::vector<DivisibleKind> repeat(const std::vector<DivisibleKind>& kinds, std::size_t rank) {
  std::vector<DivisibleKind> out;
  out.reserve(kinds.size() * rank);
  for (auto k : kinds) out.insert(out.end(), rank, k);
  return out;
}

std::vector<Integer> repeat(const std::vector<Integer>& scale, std::size_t rank) {
  std::vector<Integer> out;
  out.reserve(scale.size() * rank);
  for (const auto& s : scale) out.insert(out.end(), rank, s);
  return out;
}

// kron(I_k, M)
IntegerMatrix block_diagonal(std::size_t k, const IntegerMatrix& M) {
  IntegerMatrix out(k * M.rows(), k * M.cols());
  for (std::size_t c = 0; c < k; ++c) out.set_block(c * M.rows(), c * M.cols(), M);
  return out;
}

IntegerMatrix stage_relations(const std::vector<DivisibleKind>& kinds, const std::vector<Integer>& scale,
                              const Integer& N) {
  std::size_t circles = 0;
  for (auto k : kinds) circles += k == DivisibleKind::Circle;
  IntegerMatrix rel(kinds.size(), circles);
  std::size_t j = 0;
  for (std::size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i] == DivisibleKind::Circle) rel(i, j++) = scale[i] * N;
  return rel;
}

IntegerVector numerators(const MixedModuleElement& x, const std::vector<Integer>& scale, const Integer& N) {
  IntegerVector out(x.values.size());
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    Rational q = x.values[i] * Rational(scale[i] * N);
    if (boost::multiprecision::denominator(q) != 1)
      throw NoSolution("cone element is not in the stage at modulus " + N.str());
    out[i] = boost::multiprecision::numerator(q);
  }
  return out;
}

MixedModuleElement from_numerators(const std::vector<DivisibleKind>& kinds, const std::vector<Integer>& scale,
                                   const IntegerVector& v, const Integer& N, std::size_t offset) {
  MixedModuleElement x{kinds, RationalVector(kinds.size())};
  for (std::size_t i = 0; i < kinds.size(); ++i) x.values[i] = Rational(v[offset + i], scale[i] * N);
  x.normalize();
  return x;
}

}  // namespace

void MixedModuleElement::normalize() {
  if (kinds.size() != values.size()) throw ShapeMismatch("mixed element: kinds and values differ in length");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (kinds[i] == DivisibleKind::Circle) values[i] = frac(values[i]);
}

bool MixedModuleElement::is_zero() const {
  for (const auto& v : values)
    if (v != 0) return false;
  return true;
}

ConeComplex::ConeComplex(IntegerCochainComplex base, InjectiveResolution resolution)
    : base_(std::move(base)), resolution_(std::move(resolution)) {}

ConeElement ConeComplex::zero(int n) const {
  return element(n, RationalVector(prime_size(n)), RationalVector(double_prime_size(n)));
}

ConeElement ConeComplex::element(int n, RationalVector prime, RationalVector double_prime) const {
  if (prime.size() != prime_size(n) || double_prime.size() != double_prime_size(n))
    throw ShapeMismatch("cone element has wrong shape for degree " + std::to_string(n));
  ConeElement x{{repeat(resolution_.prime_kinds, base_.rank(n)), std::move(prime)},
                {repeat(resolution_.double_prime_kinds, base_.rank(n + 1)), std::move(double_prime)}};
  x.prime.normalize();
  x.double_prime.normalize();
  return x;
}

void ConeComplex::validate() const {
  base_.validate();
  resolution_.validate();
}

IntegerMatrix cone_stage_boundary(const ConeComplex& K, int n) {
  const auto& C = K.base();
  const auto& R = K.resolution();
  const std::size_t p = R.prime_size(), q = R.double_prime_size();
  const std::size_t rows_prime = p * C.rank(n - 1), rows_dprime = q * C.rank(n);
  const std::size_t cols_prime = p * C.rank(n), cols_dprime = q * C.rank(n + 1);
  IntegerMatrix d(rows_prime + rows_dprime, cols_prime + cols_dprime);
  if (d.rows() == 0 || d.cols() == 0) return d;
  // beta numerators do not depend on the modulus.
  IntegerMatrix beta = R.stage(Integer(1)).beta;
  d.set_block(0, 0, block_diagonal(p, C.delta(n - 1).transpose()));
  d.set_block(rows_prime, 0, kronecker(beta, IntegerMatrix::identity(C.rank(n))));
  d.set_block(rows_prime, cols_prime, -block_diagonal(q, C.delta(n).transpose()));
  return d;
}

PresentedChainComplex ConeComplex::stage(const Integer& N) const {
  std::vector<Presentation> groups;
  std::vector<IntegerMatrix> boundaries;
  for (int n = lo(); n <= hi(); ++n) {
    auto kinds = repeat(resolution_.prime_kinds, base_.rank(n));
    auto dkinds = repeat(resolution_.double_prime_kinds, base_.rank(n + 1));
    IntegerMatrix rel = direct_sum(stage_relations(kinds, repeat(resolution_.prime_scale, base_.rank(n)), N),
                                   stage_relations(dkinds, repeat(resolution_.double_prime_scale, base_.rank(n + 1)), N));
    groups.emplace_back(kinds.size() + dkinds.size(), rel);
    boundaries.push_back(cone_stage_boundary(*this, n));
  }
  // The boundary out of the lowest degree lands in a zero module.
  if (!boundaries.empty()) boundaries.front() = IntegerMatrix(0, groups.front().generators());
  return PresentedChainComplex(lo(), std::move(groups), std::move(boundaries));
}

IntegerVector ConeComplex::stage_coordinates(const ConeElement& x, const Integer& N) const {
  IntegerVector out;
  std::size_t rank_n = resolution_.prime_size() ? x.prime.values.size() / resolution_.prime_size() : 0;
  std::size_t rank_n1 =
      resolution_.double_prime_size() ? x.double_prime.values.size() / resolution_.double_prime_size() : 0;
  IntegerVector a = numerators(x.prime, repeat(resolution_.prime_scale, rank_n), N);
  IntegerVector b = numerators(x.double_prime, repeat(resolution_.double_prime_scale, rank_n1), N);
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ConeElement ConeComplex::from_stage(int n, const IntegerVector& v, const Integer& N) const {
  if (v.size() != prime_size(n) + double_prime_size(n)) throw ShapeMismatch("stage vector has wrong length");
  ConeElement x;
  x.prime = from_numerators(repeat(resolution_.prime_kinds, base_.rank(n)),
                            repeat(resolution_.prime_scale, base_.rank(n)), v, N, 0);
  x.double_prime = from_numerators(repeat(resolution_.double_prime_kinds, base_.rank(n + 1)),
                                   repeat(resolution_.double_prime_scale, base_.rank(n + 1)), v, N, prime_size(n));
  return x;
}

ConeComplex dualize(const IntegerCochainComplex& C, const InjectiveResolution& R) {
  C.validate();
  R.validate();
  return ConeComplex(C, R);
}

ConeElement cone_boundary_apply(const ConeComplex& K, int n, const ConeElement& x) {
  const auto& C = K.base();
  const auto& R = K.resolution();
  if (x.prime.values.size() != K.prime_size(n) || x.double_prime.values.size() != K.double_prime_size(n))
    throw ShapeMismatch("cone element has wrong shape for degree " + std::to_string(n));
  const std::size_t p = R.prime_size(), q = R.double_prime_size();
  const std::size_t r0 = C.rank(n - 1), r1 = C.rank(n), r2 = C.rank(n + 1);
  RationalMatrix dT0 = to_rational(C.delta(n - 1).transpose());  // r0 x r1
  RationalMatrix dT1 = to_rational(C.delta(n).transpose());      // r1 x r2

  RationalVector first(p * r0);
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t i = 0; i < r0; ++i) {
      Rational s = 0;
      for (std::size_t b = 0; b < r1; ++b) s += dT0(i, b) * x.prime.values[c * r1 + b];
      first[c * r0 + i] = s;
    }
  RationalVector second(q * r1);
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t b = 0; b < r1; ++b) {
      Rational s = 0;
      for (std::size_t c = 0; c < p; ++c) {
        const Rational& e = R.beta(t, c);
        if (e != 0) s += e * x.prime.values[c * r1 + b];
      }
      for (std::size_t j = 0; j < r2; ++j) s -= dT1(b, j) * x.double_prime.values[t * r2 + j];
      second[t * r1 + b] = s;
    }
  return K.element(n - 1, std::move(first), std::move(second));
}

Integer base_modulus(const ConeComplex& K, const SaturationOptions& options) {
  Integer N = coboundary_invariant_product(K.base()) * K.resolution().base.exponent();
  if (N < 1) N = 1;
  return 2 * N * options.base_multiplier;
}

ConeHomologyResult cone_homology_report(const ConeComplex& K, int n, const SaturationOptions& options) {
  ConeHomologyResult out;
  out.degree = n;
  Integer N0 = base_modulus(K, options);
  out.moduli = {N0, N0 * N0, N0 * N0 * N0};
  if (out.moduli.back() > options.modulus_cap)
    throw SaturationFailure("modulus " + out.moduli.back().str() + " exceeds the configured cap");
  if (n < K.lo() || n > K.hi()) return out;
  std::vector<FGAbelianGroup> values;
  for (const auto& N : out.moduli) values.push_back(homology(K.stage(N), n).group);
  if (!(values[0] == values[1] && values[1] == values[2]))
    throw SaturationFailure("cone homology in degree " + std::to_string(n) + " did not stabilize: " +
                            values[0].to_string() + ", " + values[1].to_string() + ", " + values[2].to_string());
  out.group = values[0];
  return out;
}

ConeElement ConeChainMap::apply(int n, const ConeElement& x) const {
  auto it = components.find(n);
  if (it == components.end()) return target->zero(n);
  // Scale-free coordinates: the component matrices commute with every stage
  // numerator convention, so apply them at N = 1 with exact rationals.
  const auto& R = source->resolution();
  std::size_t p = source->prime_size(n), q = source->double_prime_size(n);
  RationalVector v(p + q);
  auto ps = repeat(R.prime_scale, p / std::max<std::size_t>(1, R.prime_size()));
  auto qs = repeat(R.double_prime_scale, q / std::max<std::size_t>(1, R.double_prime_size()));
  for (std::size_t i = 0; i < p; ++i) v[i] = x.prime.values[i] * Rational(ps[i]);
  for (std::size_t i = 0; i < q; ++i) v[p + i] = x.double_prime.values[i] * Rational(qs[i]);
  RationalVector w = to_rational(it->second) * v;
  std::size_t tp = target->prime_size(n);
  auto tps = repeat(R.prime_scale, tp / std::max<std::size_t>(1, R.prime_size()));
  auto tqs = repeat(R.double_prime_scale, target->double_prime_size(n) / std::max<std::size_t>(1, R.double_prime_size()));
  RationalVector a(tp), b(target->double_prime_size(n));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = w[i] / Rational(tps[i]);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = w[tp + i] / Rational(tqs[i]);
  return target->element(n, std::move(a), std::move(b));
}

namespace {

void require_same_resolution(const ConeComplex& a, const ConeComplex& b) {
  const auto& r = a.resolution();
  const auto& s = b.resolution();
  if (!(r.base == s.base && r.prime_kinds == s.prime_kinds && r.double_prime_kinds == s.double_prime_kinds &&
        r.alpha == s.alpha && r.beta == s.beta && r.prime_scale == s.prime_scale &&
        r.double_prime_scale == s.double_prime_scale))
    throw ResolutionMismatch("cones are built over different resolutions");
}

// phi o M for phi in Hom(Z^rows(M); X) stored component-major with k components.
IntegerMatrix precompose(std::size_t k, const IntegerMatrix& M) { return block_diagonal(k, M.transpose()); }

}  // namespace

ConeChainMap induced_cone_map(const CochainMap& f, const ConeComplex& source_cone, const ConeComplex& target_cone) {
  // source_cone is the cone of f.target, target_cone the cone of f.source.
  require_same_resolution(source_cone, target_cone);
  if (!(source_cone.base() == *f.target) || !(target_cone.base() == *f.source))
    throw ShapeMismatch("induced_cone_map: cones do not match the map's complexes");
  f.validate();
  const std::size_t p = source_cone.resolution().prime_size(), q = source_cone.resolution().double_prime_size();
  ConeChainMap out{&source_cone, &target_cone, {}};
  int lo = std::min(source_cone.lo(), target_cone.lo());
  int hi = std::max(source_cone.hi(), target_cone.hi());
  for (int n = lo; n <= hi; ++n)
    out.components[n] = direct_sum(precompose(p, f.component(n)), precompose(q, f.component(n + 1)));
  return out;
}

bool check_cone_homotopy(const ConeChainMap& f, const ConeChainMap& g, const ConeHomotopy& D) {
  const ConeComplex& S = *f.source;
  const ConeComplex& T = *f.target;
  auto comp = [](const std::map<int, IntegerMatrix>& m, int n, std::size_t rows, std::size_t cols) {
    auto it = m.find(n);
    return it != m.end() ? it->second : IntegerMatrix(rows, cols);
  };
  auto size = [](const ConeComplex& K, int n) { return K.prime_size(n) + K.double_prime_size(n); };
  int lo = std::min(S.lo(), T.lo()) - 1;
  int hi = std::max(S.hi(), T.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    IntegerMatrix lhs = cone_stage_boundary(T, n + 1) * comp(D.components, n, size(T, n + 1), size(S, n)) +
                        comp(D.components, n - 1, size(T, n), size(S, n - 1)) * cone_stage_boundary(S, n);
    IntegerMatrix rhs = comp(f.components, n, size(T, n), size(S, n)) - comp(g.components, n, size(T, n), size(S, n));
    if (lhs != rhs) return false;
  }
  return true;
}

ConeHomotopy homotopy_lift(const CochainMap& f, const CochainMap& g, const CochainHomotopy& D,
                           const ConeComplex& source_cone, const ConeComplex& target_cone) {
  validate_homotopy(f, g, D);
  ConeChainMap fc = induced_cone_map(f, source_cone, target_cone);
  ConeChainMap gc = induced_cone_map(g, source_cone, target_cone);
  const auto& C = *f.source;
  const auto& Cp = *f.target;
  const std::size_t p = source_cone.resolution().prime_size(), q = source_cone.resolution().double_prime_size();
  ConeHomotopy out;
  int lo = std::min(source_cone.lo(), target_cone.lo()) - 1;
  int hi = std::max(source_cone.hi(), target_cone.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    IntegerMatrix a = precompose(p, D.component(n + 1, C, Cp));
    IntegerMatrix b = -precompose(q, D.component(n + 2, C, Cp));
    out.components[n] = direct_sum(a, b);
  }
  if (!check_cone_homotopy(fc, gc, out)) throw NotAHomotopy("lifted homotopy fails the cone identity");
  return out;
}

PresentedChainMap as_presented(const ConeChainMap& f, const PresentedChainComplex& source_stage,
                               const PresentedChainComplex& target_stage) {
  return PresentedChainMap{&source_stage, &target_stage, f.components};
}

}  // namespace ashom
