#include <string>

#include "ashom/exact_sequence.hpp"

namespace ashom {
namespace {

Integer common_denominator(const RationalVector& v) {
  Integer L = 1;
  for (const auto& q : v) L = lcm(L, boost::multiprecision::denominator(q));
  return L;
}

// Some x in Q^cols with A x = b, or nullopt.
std::optional<RationalVector> rational_solve(const IntegerMatrix& A, const RationalVector& b) {
  Integer L = common_denominator(b);
  IntegerVector bi(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bi[i] = boost::multiprecision::numerator(b[i] * Rational(L));
  SmithDecomposition s = smith_normal_form(A);
  IntegerVector y = s.U * bi;
  RationalVector z(A.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < s.rank)
      z[i] = Rational(y[i], s.S(i, i));
    else if (y[i] != 0)
      return std::nullopt;
  }
  RationalVector x = to_rational(s.V) * z;
  for (auto& e : x) e /= Rational(L);
  return x;
}

// Extension e of alpha along phi: e o phi = alpha on the G generators, with e
// a homomorphism on G1 (torsion generators go to elements of matching order).
RationalMatrix extend_alpha(const GroupExtension& S, const InjectiveResolution& R) {
  const std::size_t r1 = S.G1.rank(), t1 = S.G1.torsion().size(), g = S.G.generator_count();
  IntegerMatrix A(g, r1);  // free part of phi, transposed
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < r1; ++i) A(j, i) = S.phi(i, j);
  IntegerMatrix P = kernel_basis(A.transpose()).transpose();  // P A = 0

  RationalMatrix eps(R.prime_size(), r1 + t1);
  for (std::size_t c = 0; c < R.prime_size(); ++c) {
    RationalVector a = R.alpha.row(c);
    if (R.prime_kinds[c] == DivisibleKind::Rational) {
      auto x = rational_solve(A, a);
      if (!x) throw NotExactCoefficients("cannot extend the resolution along the first map");
      for (std::size_t i = 0; i < r1; ++i) eps(c, i) = (*x)[i];
      continue;
    }
    // A x + T y - k = a with x rational, y and k integral; torsion generator i
    // of G1 takes the value y_i / d_i.
    Integer L = common_denominator(a);
    for (const auto& d : S.G1.torsion()) L = lcm(L, d);
    IntegerMatrix LT(g, t1), LI = IntegerMatrix::identity(g).scaled(L);
    IntegerVector La(g);
    for (std::size_t j = 0; j < g; ++j) {
      La[j] = boost::multiprecision::numerator(a[j] * Rational(L));
      for (std::size_t i = 0; i < t1; ++i) LT(j, i) = S.phi(r1 + i, j) * (L / S.G1.torsion()[i]);
    }
    IntegerMatrix system = hstack(P * LT, -(P * LI));
    IntegerSolver solver(system);
    auto yk = solver.solve(P * La);
    if (!yk) throw NotExactCoefficients("cannot extend the resolution along the first map");
    IntegerVector y(yk->begin(), yk->begin() + static_cast<std::ptrdiff_t>(t1));
    IntegerVector k(yk->begin() + static_cast<std::ptrdiff_t>(t1), yk->end());
    IntegerVector ty = LT * y;
    RationalVector rres(g);
    for (std::size_t j = 0; j < g; ++j) rres[j] = Rational(La[j] - ty[j] + L * k[j], L);
    auto x = rational_solve(A, rres);
    if (!x) throw NotExactCoefficients("cannot extend the resolution along the first map");
    for (std::size_t i = 0; i < r1; ++i) eps(c, i) = frac((*x)[i]);
    for (std::size_t i = 0; i < t1; ++i) eps(c, r1 + i) = frac(Rational(y[i], S.G1.torsion()[i]));
  }
  return eps;
}

InjectiveResolution rescaled(InjectiveResolution R, const Integer& K) {
  for (auto& s : R.prime_scale) s *= K;
  for (auto& s : R.double_prime_scale) s *= K;
  return R;
}

Integer denominator_lcm(const Integer& L, const Rational& q) { return lcm(L, boost::multiprecision::denominator(q)); }

}  // namespace

void validate_extension(const GroupExtension& S) {
  Presentation G = Presentation::of(S.G), G1 = Presentation::of(S.G1), G2 = Presentation::of(S.G2);
  try {
    Morphism phi{G, G1, S.phi};
    Morphism psi{G1, G2, S.psi};
    phi.validate();
    psi.validate();
    if (!phi.is_injective()) throw NotExactCoefficients("first map is not injective");
    if (!psi.is_surjective()) throw NotExactCoefficients("second map is not surjective");
    IntegerMatrix ker = psi.kernel().basis;
    IntegerMatrix img = hstack(S.phi, G1.relations());
    if (!lattice_contains(ker, img, G1.relations()) || !lattice_contains(img, ker, G1.relations()))
      throw NotExactCoefficients("image of the first map differs from the kernel of the second");
  } catch (const ShapeMismatch& e) {
    throw NotExactCoefficients(e.what());
  }
}

HorseshoeResolution horseshoe(const GroupExtension& S) {
  validate_extension(S);
  InjectiveResolution R = resolve_injective(S.G);
  InjectiveResolution R2 = resolve_injective(S.G2);
  RationalMatrix eps = extend_alpha(S, R);
  const std::size_t p = R.prime_size(), q = R.double_prime_size();
  const std::size_t p2 = R2.prime_size(), q2 = R2.double_prime_size();

  // mu = beta o eps vanishes on phi(G); lambda is its factorization through
  // psi, extended from G2 to G2' along the canonical embedding.
  RationalMatrix mu = R.beta * eps;
  Presentation G2 = Presentation::of(S.G2);
  IntegerSolver preimage(hstack(S.psi, G2.relations()));
  RationalMatrix lambda(q, p2);
  for (std::size_t k = 0; k < S.G2.generator_count(); ++k) {
    IntegerVector e(S.G2.generator_count());
    e[k] = 1;
    auto u = preimage.solve(e);
    if (!u) throw NotExactCoefficients("second map is not surjective");
    IntegerVector uk(u->begin(), u->begin() + static_cast<std::ptrdiff_t>(S.G1.generator_count()));
    RationalVector value = mu * to_rational(IntegerMatrix(uk.size(), 1, uk)).column(0);
    for (std::size_t t = 0; t < q; ++t) {
      if (R.double_prime_kinds[t] == DivisibleKind::Rational) {
        if (value[t] != 0) throw NotExactCoefficients("cannot extend into a rational coordinate");
        continue;
      }
      Rational v = frac(value[t]);
      if (k < S.G2.rank()) {
        lambda(t, k) = v;
      } else {
        const Integer& d = S.G2.torsion()[k - S.G2.rank()];
        Rational m = v * Rational(d);
        if (boost::multiprecision::denominator(m) != 1)
          throw NotExactCoefficients("torsion order is not respected by the extension");
        lambda(t, k) = m;
      }
    }
  }

  Integer K = 1;
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t i = 0; i < eps.cols(); ++i) K = denominator_lcm(K, eps(c, i) * Rational(R.prime_scale[c]));
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t k = 0; k < p2; ++k)
      K = denominator_lcm(K, lambda(t, k) * Rational(R.double_prime_scale[t]) / Rational(R2.prime_scale[k]));

  HorseshoeResolution out;
  out.R = rescaled(R, K);
  out.R2 = R2;
  InjectiveResolution& R1 = out.R1;
  R1.base = S.G1;
  R1.prime_kinds = out.R.prime_kinds;
  R1.prime_kinds.insert(R1.prime_kinds.end(), R2.prime_kinds.begin(), R2.prime_kinds.end());
  R1.double_prime_kinds = out.R.double_prime_kinds;
  R1.double_prime_kinds.insert(R1.double_prime_kinds.end(), R2.double_prime_kinds.begin(),
                               R2.double_prime_kinds.end());
  R1.prime_scale = out.R.prime_scale;
  R1.prime_scale.insert(R1.prime_scale.end(), R2.prime_scale.begin(), R2.prime_scale.end());
  R1.double_prime_scale = out.R.double_prime_scale;
  R1.double_prime_scale.insert(R1.double_prime_scale.end(), R2.double_prime_scale.begin(),
                               R2.double_prime_scale.end());
  R1.alpha = RationalMatrix(p + p2, S.G1.generator_count());
  R1.alpha.set_block(0, 0, eps);
  R1.alpha.set_block(p, 0, R2.alpha * to_rational(S.psi));
  R1.beta = RationalMatrix(q + q2, p + p2);
  R1.beta.set_block(0, 0, R.beta);
  R1.beta.set_block(0, p, -lambda);
  R1.beta.set_block(q, p, R2.beta);
  out.R.validate();
  out.R1.validate();
  out.R2.validate();
  return out;
}

LongExactSequenceReport coefficient_les(const IntegerCochainComplex& C, const GroupExtension& S,
                                        const SaturationOptions& options) {
  HorseshoeResolution H = horseshoe(S);
  ConeComplex K = dualize(C, H.R), K1 = dualize(C, H.R1), K2 = dualize(C, H.R2);
  Integer N = common_modulus({&K, &K1, &K2}, options);
  PresentedChainComplex A = K.stage(N), B = K1.stage(N), D = K2.stage(N);
  const std::size_t p = H.R.prime_size(), q = H.R.double_prime_size();
  const std::size_t p2 = H.R2.prime_size(), q2 = H.R2.double_prime_size();

  PresentedChainMap inc{&A, &B, {}}, proj{&B, &D, {}};
  for (int n = K.lo(); n <= K.hi(); ++n) {
    std::size_t a = p * C.rank(n), b = q * C.rank(n + 1);
    std::size_t a2 = p2 * C.rank(n), b2 = q2 * C.rank(n + 1);
    IntegerMatrix in_prime = vstack(IntegerMatrix::identity(a), IntegerMatrix(a2, a));
    IntegerMatrix in_dprime = vstack(IntegerMatrix::identity(b), IntegerMatrix(b2, b));
    IntegerMatrix out_prime = hstack(IntegerMatrix(a2, a), IntegerMatrix::identity(a2));
    IntegerMatrix out_dprime = hstack(IntegerMatrix(b2, b), IntegerMatrix::identity(b2));
    inc.components[n] = direct_sum(in_prime, in_dprime);
    proj.components[n] = direct_sum(out_prime, out_dprime);
  }
  try {
    return homology_sequence(inc, proj, S.G.to_string(), S.G1.to_string(), S.G2.to_string());
  } catch (const NotExact& e) {
    throw NotExactCoefficients(e.what());
  }
}

}  // namespace ashom
