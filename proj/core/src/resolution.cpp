#include "ashom/resolution.hpp"

#include <algorithm>

namespace ashom {
namespace {

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Integer as_integer(const Rational& q) {
  if (!is_integer(q)) throw ResolutionMismatch("stage matrix entry is not integral");
  return boost::multiprecision::numerator(q);
}

Presentation stage_module(const std::vector<DivisibleKind>& kinds, const std::vector<Integer>& scale,
                          const Integer& N) {
  std::size_t circles = static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), DivisibleKind::Circle));
  IntegerMatrix rel(kinds.size(), circles);
  std::size_t j = 0;
  for (std::size_t c = 0; c < kinds.size(); ++c)
    if (kinds[c] == DivisibleKind::Circle) rel(c, j++) = scale[c] * N;
  return Presentation(kinds.size(), rel);
}

std::string describe(const std::vector<DivisibleKind>& kinds) {
  if (kinds.empty()) return "0";
  std::string out;
  for (auto k : kinds) {
    if (!out.empty()) out += " (+) ";
    out += k == DivisibleKind::Rational ? "Q" : "Q/Z";
  }
  return out;
}

}  // namespace

void InjectiveResolution::validate() const {
  const std::size_t p = prime_size(), q = double_prime_size();
  if (alpha.rows() != p || alpha.cols() != base.generator_count())
    throw ResolutionMismatch("resolution: alpha has wrong shape");
  if (beta.rows() != q || beta.cols() != p) throw ResolutionMismatch("resolution: beta has wrong shape");
  if (prime_scale.size() != p || double_prime_scale.size() != q)
    throw ResolutionMismatch("resolution: scale vectors have wrong length");
  for (const auto& s : prime_scale)
    if (s <= 0) throw ResolutionMismatch("resolution: scales must be positive");
  for (const auto& s : double_prime_scale)
    if (s <= 0) throw ResolutionMismatch("resolution: scales must be positive");

  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t s = 0; s < p; ++s) {
      const Rational& e = beta(t, s);
      if (prime_kinds[s] == DivisibleKind::Circle) {
        if (double_prime_kinds[t] == DivisibleKind::Rational && e != 0)
          throw ResolutionMismatch("resolution: Q/Z -> Q entries must vanish");
        if (double_prime_kinds[t] == DivisibleKind::Circle && !is_integer(e))
          throw ResolutionMismatch("resolution: Q/Z -> Q/Z entries must be integers");
      }
      // Stage integrality is independent of N.
      if (!is_integer(e * Rational(double_prime_scale[t]) / Rational(prime_scale[s])))
        throw ResolutionMismatch("resolution: scales do not make beta integral on stages");
    }
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t i = 0; i < base.generator_count(); ++i) {
      const Rational& a = alpha(c, i);
      if (!is_integer(a * Rational(prime_scale[c])))
        throw ResolutionMismatch("resolution: alpha image escapes the stage lattice");
      // A generator of order d must land on an element of order dividing d.
      if (i >= base.rank()) {
        const Integer& d = base.torsion()[i - base.rank()];
        if (prime_kinds[c] == DivisibleKind::Rational ? a != 0 : !is_integer(a * Rational(d)))
          throw ResolutionMismatch("resolution: alpha does not respect torsion orders");
      }
    }
  RationalMatrix ba = beta * alpha;
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t i = 0; i < ba.cols(); ++i) {
      bool zero = double_prime_kinds[t] == DivisibleKind::Rational ? ba(t, i) == 0 : is_integer(ba(t, i));
      if (!zero) throw ResolutionMismatch("resolution: beta * alpha is not zero");
    }
}

ResolutionStage InjectiveResolution::stage(const Integer& N) const {
  if (N <= 0) throw ResolutionMismatch("stage modulus must be positive");
  ResolutionStage st;
  st.modulus = N;
  st.prime = stage_module(prime_kinds, prime_scale, N);
  st.double_prime = stage_module(double_prime_kinds, double_prime_scale, N);
  st.beta = IntegerMatrix(double_prime_size(), prime_size());
  for (std::size_t t = 0; t < double_prime_size(); ++t)
    for (std::size_t s = 0; s < prime_size(); ++s)
      st.beta(t, s) = as_integer(beta(t, s) * Rational(double_prime_scale[t]) / Rational(prime_scale[s]));
  st.alpha = IntegerMatrix(prime_size(), base.generator_count());
  for (std::size_t c = 0; c < prime_size(); ++c)
    for (std::size_t i = 0; i < base.generator_count(); ++i)
      st.alpha(c, i) = as_integer(alpha(c, i) * Rational(prime_scale[c] * N));
  return st;
}

std::string InjectiveResolution::describe_prime() const { return describe(prime_kinds); }
std::string InjectiveResolution::describe_double_prime() const { return describe(double_prime_kinds); }

InjectiveResolution resolve_injective(const FGAbelianGroup& G) {
  InjectiveResolution R;
  R.base = G;
  const std::size_t r = G.rank(), t = G.torsion().size(), n = r + t;
  for (std::size_t i = 0; i < r; ++i) R.prime_kinds.push_back(DivisibleKind::Rational);
  for (std::size_t j = 0; j < t; ++j) R.prime_kinds.push_back(DivisibleKind::Circle);
  R.double_prime_kinds.assign(n, DivisibleKind::Circle);
  R.alpha = RationalMatrix(n, n);
  R.beta = RationalMatrix(n, n);
  R.prime_scale.assign(n, Integer(1));
  R.double_prime_scale.assign(n, Integer(1));
  for (std::size_t i = 0; i < r; ++i) {
    R.alpha(i, i) = 1;
    R.beta(i, i) = 1;  // reduction mod 1
  }
  for (std::size_t j = 0; j < t; ++j) {
    const Integer& d = G.torsion()[j];
    R.alpha(r + j, r + j) = Rational(1, d);
    R.beta(r + j, r + j) = Rational(d);
    R.prime_scale[r + j] = d;
  }
  return R;
}

InjectiveResolution reorder_resolution(const InjectiveResolution& R) {
  InjectiveResolution out = R;
  const std::size_t p = R.prime_size(), q = R.double_prime_size();
  std::reverse(out.prime_kinds.begin(), out.prime_kinds.end());
  std::reverse(out.double_prime_kinds.begin(), out.double_prime_kinds.end());
  std::reverse(out.prime_scale.begin(), out.prime_scale.end());
  std::reverse(out.double_prime_scale.begin(), out.double_prime_scale.end());
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t i = 0; i < R.alpha.cols(); ++i) out.alpha(p - 1 - c, i) = R.alpha(c, i);
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t s = 0; s < p; ++s) out.beta(q - 1 - t, p - 1 - s) = R.beta(t, s);
  return out;
}

InjectiveResolution pad_resolution(const InjectiveResolution& R) {
  InjectiveResolution out;
  out.base = R.base;
  const std::size_t p = R.prime_size(), q = R.double_prime_size();
  out.prime_kinds = R.prime_kinds;
  out.prime_kinds.push_back(DivisibleKind::Rational);
  out.prime_kinds.push_back(DivisibleKind::Circle);
  out.double_prime_kinds = R.double_prime_kinds;
  out.double_prime_kinds.push_back(DivisibleKind::Rational);
  out.double_prime_kinds.push_back(DivisibleKind::Circle);
  out.prime_scale = R.prime_scale;
  out.prime_scale.insert(out.prime_scale.end(), {Integer(1), Integer(1)});
  out.double_prime_scale = R.double_prime_scale;
  out.double_prime_scale.insert(out.double_prime_scale.end(), {Integer(1), Integer(1)});
  out.alpha = RationalMatrix(p + 2, R.alpha.cols());
  out.alpha.set_block(0, 0, R.alpha);
  out.beta = RationalMatrix(q + 2, p + 2);
  out.beta.set_block(0, 0, R.beta);
  out.beta(q, p) = 1;
  out.beta(q + 1, p + 1) = 1;
  return out;
}

StageExactness check_stage(const InjectiveResolution& R, const Integer& N) {
  ResolutionStage st = R.stage(N);
  Presentation G = Presentation::of(R.base);
  Morphism alpha{G, st.prime, st.alpha};
  Morphism beta{st.prime, st.double_prime, st.beta};
  alpha.validate();
  beta.validate();
  StageExactness e;
  e.alpha_injective = alpha.is_injective();
  e.beta_surjective = beta.is_surjective();
  Subquotient ker = beta.kernel();
  e.kernel = ker.group.canonical();
  e.image_equals_kernel = lattice_contains(ker.basis, hstack(st.alpha, st.prime.relations()), st.prime.relations()) &&
                          lattice_contains(hstack(st.alpha, st.prime.relations()), ker.basis, st.prime.relations());
  return e;
}

}  // namespace ashom
