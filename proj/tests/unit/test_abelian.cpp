#include <random>

#include "ashom/abelian.hpp"
#include "ashom/presentation.hpp"
#include "ashom/resolution.hpp"
#include "ashom/smith.hpp"
#include "doctest.h"

using namespace ashom;

namespace {

FGAbelianGroup cyc(int d) { return FGAbelianGroup::cyclic(d); }

bool divisibility_chain(const SmithDecomposition& s) {
  for (std::size_t i = 0; i + 1 < s.rank; ++i)
    if (s.S(i, i) <= 0 || s.S(i + 1, i + 1) % s.S(i, i) != 0) return false;
  return true;
}

bool diagonal_only(const IntegerMatrix& S) {
  for (std::size_t r = 0; r < S.rows(); ++r)
    for (std::size_t c = 0; c < S.cols(); ++c)
      if (r != c && S(r, c) != 0) return false;
  return true;
}

// Number of x in Z/d1 (+) ... with a x = 0, by enumeration.
long killed_by(const std::vector<Integer>& orders, long a) {
  long count = 1;
  for (const auto& d : orders) {
    long n = static_cast<long>(d), k = 0;
    for (long x = 0; x < n; ++x)
      if ((a * x) % n == 0) ++k;
    count *= k;
  }
  return count;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithDecomposition s = smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}});
  CHECK(s.S == IntegerMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * IntegerMatrix{{2, 4}, {6, 8}} * s.V == s.S);

  CHECK(smith_normal_form(IntegerMatrix(2, 3)).S == IntegerMatrix(2, 3));
  CHECK(smith_normal_form(IntegerMatrix::identity(3)).S == IntegerMatrix::identity(3));
}

TEST_CASE("smith normal form is exact and canonical on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-10, 10), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntegerMatrix A(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < A.rows(); ++r)
      for (std::size_t c = 0; c < A.cols(); ++c) A(r, c) = entry(rng);
    SmithDecomposition s = smith_normal_form(A);
    REQUIRE(s.U * A * s.V == s.S);
    CHECK(diagonal_only(s.S));
    CHECK(divisibility_chain(s));
    CHECK(s.U * s.U_inverse == IntegerMatrix::identity(A.rows()));
    // Deterministic output for a fixed input.
    CHECK(smith_normal_form(A).U == s.U);
  }
}

TEST_CASE("coefficients grow without overflow") {
  IntegerMatrix A(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) A(r, c) = Integer(1) << (40 + 7 * r + 3 * c);
  A(0, 0) += 1;
  SmithDecomposition s = smith_normal_form(A);
  CHECK(s.U * A * s.V == s.S);
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(IntegerMatrix{{2, 0}, {0, 3}}) == cyc(6));
  CHECK(cokernel(IntegerMatrix{{0}}) == FGAbelianGroup::free(1));
  CHECK(cokernel(IntegerMatrix::identity(2)).is_trivial());
}

TEST_CASE("hom examples") {
  CHECK(hom(FGAbelianGroup::free(1), cyc(5)) == cyc(5));
  CHECK(hom(cyc(6), cyc(4)) == cyc(2));
  CHECK(hom(cyc(3), FGAbelianGroup::free(1)).is_trivial());
}

TEST_CASE("ext examples") {
  CHECK(ext(FGAbelianGroup::free(1), cyc(7)).is_trivial());
  CHECK(ext(cyc(6), FGAbelianGroup::free(1)) == cyc(6));
  CHECK(ext(cyc(4), cyc(6)) == cyc(2));
}

TEST_CASE("is_isomorphic examples") {
  CHECK(is_isomorphic(FGAbelianGroup(0, {Integer(2), Integer(3)}), cyc(6)));
  CHECK_FALSE(is_isomorphic(FGAbelianGroup::free(1), FGAbelianGroup::trivial()));
  CHECK_FALSE(is_isomorphic(cyc(4), FGAbelianGroup(0, {Integer(2), Integer(2)})));
}

TEST_CASE("group descriptors") {
  CHECK(parse_group("Z") == FGAbelianGroup::free(1));
  CHECK(parse_group("Z/6") == cyc(6));
  CHECK(parse_group("Z^2+Z/2") == FGAbelianGroup(2, {Integer(2)}));
  CHECK(parse_group("0").is_trivial());
  CHECK(FGAbelianGroup(2, {Integer(2), Integer(6)}).to_string() == "Z^2 (+) Z/2 (+) Z/6");
  CHECK(parse_group(FGAbelianGroup(1, {Integer(4)}).to_string()) == FGAbelianGroup(1, {Integer(4)}));
}

TEST_CASE("hom matches enumeration on random cokernels") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-10, 10);
  auto random_torsion = [&] {
    for (;;) {
      IntegerMatrix A{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
      FGAbelianGroup G = cokernel(A);
      if (G.is_finite() && G.torsion_order() <= 200) return G;
    }
  };
  for (int trial = 0; trial < 60; ++trial) {
    FGAbelianGroup A = random_torsion(), B = random_torsion();
    // A homomorphism picks, for each cyclic summand Z/a of A, an element of B
    // killed by a.
    long count = 1;
    for (const auto& a : A.torsion()) count *= killed_by(B.torsion(), static_cast<long>(a));
    CHECK(hom(A, B).order() == std::optional<Integer>(count));
  }
}

TEST_CASE("ext of a free group vanishes") {
  for (const auto& B : {FGAbelianGroup::free(2), cyc(4), FGAbelianGroup(1, {Integer(6)}), FGAbelianGroup::trivial()})
    CHECK(ext(FGAbelianGroup::free(3), B).is_trivial());
}

TEST_CASE("canonical resolutions") {
  InjectiveResolution Z = resolve_injective(FGAbelianGroup::free(1));
  CHECK(Z.describe_prime() == "Q");
  CHECK(Z.describe_double_prime() == "Q/Z");
  CHECK(Z.beta == RationalMatrix{{Rational(1)}});

  InjectiveResolution Z4 = resolve_injective(cyc(4));
  CHECK(Z4.describe_prime() == "Q/Z");
  CHECK(Z4.describe_double_prime() == "Q/Z");
  CHECK(Z4.beta == RationalMatrix{{Rational(4)}});
  CHECK(Z4.alpha == RationalMatrix{{Rational(1, 4)}});

  InjectiveResolution mixed = resolve_injective(FGAbelianGroup(1, {Integer(2)}));
  CHECK(mixed.describe_prime() == "Q (+) Q/Z");
  CHECK(mixed.describe_double_prime() == "Q/Z (+) Q/Z");
  CHECK(mixed.beta == RationalMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}});

  CHECK(resolve_injective(FGAbelianGroup::trivial()).prime_size() == 0);
}

TEST_CASE("every bounded stage of a resolution is short exact") {
  std::vector<FGAbelianGroup> groups = {FGAbelianGroup::free(1), cyc(4), FGAbelianGroup(1, {Integer(2)}),
                                        FGAbelianGroup(2, {Integer(3), Integer(12)}), cyc(6)};
  for (const auto& G : groups) {
    InjectiveResolution R = resolve_injective(G);
    R.validate();
    for (int N = 1; N <= 24; ++N) {
      StageExactness e = check_stage(R, N);
      CHECK(e.ok());
      CHECK(e.kernel == G);
    }
    for (const auto& variant : {reorder_resolution(R), pad_resolution(R)}) {
      variant.validate();
      CHECK(check_stage(variant, 6).ok());
    }
  }
}

TEST_CASE("canonical basis of a presentation") {
  Presentation P(3, IntegerMatrix{{2, 0}, {0, 3}, {0, 0}});
  CanonicalBasis cb = canonical_basis(P);
  CHECK(cb.group == FGAbelianGroup(1, {Integer(6)}));
  // Round trip on generators, modulo relations.
  IntegerMatrix back = cb.from_canonical * cb.to_canonical;
  for (std::size_t c = 0; c < 3; ++c) {
    IntegerVector d = back.column(c);
    d[c] -= 1;
    CHECK(P.is_zero(d));
  }
}
