#include <random>

#include "ashom/towers.hpp"
#include "doctest.h"

using namespace ashom;

namespace {

const FGAbelianGroup Z = FGAbelianGroup::free(1);

std::vector<Integer> orders(const FGAbelianGroup& G) {
  std::vector<Integer> o(G.rank(), 0);
  o.insert(o.end(), G.torsion().begin(), G.torsion().end());
  return o;
}

// Random homomorphism between canonical groups; free targets ignore torsion
// sources.
IntegerMatrix random_hom(std::mt19937_64& rng, const FGAbelianGroup& A, const FGAbelianGroup& B) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<Integer> oa = orders(A), ob = orders(B);
  IntegerMatrix m(ob.size(), oa.size());
  for (std::size_t i = 0; i < ob.size(); ++i)
    for (std::size_t j = 0; j < oa.size(); ++j) {
      if (ob[i] == 0) {
        if (oa[j] == 0) m(i, j) = entry(rng);
        continue;
      }
      Integer step = ob[i] / boost::multiprecision::gcd(ob[i], oa[j]);
      m(i, j) = (Integer(entry(rng)) * step) % ob[i];
    }
  return m;
}

FGAbelianGroup random_finite(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(2, 12), k(1, 2);
  std::vector<Integer> o;
  for (int i = k(rng); i > 0; --i) o.emplace_back(d(rng));
  return FGAbelianGroup(0, o);
}

IntegerMatrix power(const IntegerMatrix& f, std::size_t k) {
  IntegerMatrix out = IntegerMatrix::identity(f.rows());
  for (std::size_t i = 0; i < k; ++i) out = f * out;
  return out;
}

// im f^depth in P, which for a Mittag-Leffler tower is the limit.
FGAbelianGroup deep_image(const Tower& T, std::size_t depth) {
  Presentation P = Presentation::of(T.period);
  return Morphism{P, P, power(T.period_map, depth)}.image().group.canonical();
}

}  // namespace

TEST_CASE("tower validation") {
  CHECK_NOTHROW(Tower::periodic(Z, IntegerMatrix{{2}}).validate());
  CHECK_THROWS_AS(Tower::periodic(FGAbelianGroup::cyclic(2), IntegerMatrix{{1, 0}}).validate(), ShapeMismatch);
  CHECK_THROWS(Tower::finite({Z, FGAbelianGroup::cyclic(2)}, {IntegerMatrix{{1}}}).validate());
  Tower t = Tower::periodic(Z, IntegerMatrix{{2}}, {FGAbelianGroup::cyclic(2)}, {}, IntegerMatrix{{1}});
  CHECK(t.stage(1) == FGAbelianGroup::cyclic(2));
  CHECK(t.stage(5) == Z);
  CHECK(t.bonding(1) == IntegerMatrix{{1}});
  CHECK(t.bonding(3) == IntegerMatrix{{2}});
  Tower d = t.truncate(3);
  CHECK_FALSE(d.is_periodic());
  CHECK(d.groups.size() == 3);
}

TEST_CASE("tower_lim examples") {
  Tower f = Tower::finite({Z, Z, Z}, {IntegerMatrix{{2}}, IntegerMatrix{{2}}});
  CHECK(tower_lim(f) == Z);
  CHECK(tower_lim(Tower::periodic(Z, IntegerMatrix{{2}})).is_trivial());
  LimReport q = lim_report(Tower::periodic(FGAbelianGroup::cyclic(4), IntegerMatrix{{2}}));
  CHECK(q.lim.is_trivial());
  CHECK(q.mittag_leffler);
  CHECK(q.stabilization_stage == std::optional<std::size_t>(2));
  CHECK(tower_lim(Tower::periodic(Z, IntegerMatrix{{1}})) == Z);
}

TEST_CASE("mittag_leffler examples") {
  CHECK(mittag_leffler(Tower::finite({Z, Z}, {IntegerMatrix{{5}}})));
  CHECK_FALSE(mittag_leffler(Tower::periodic(Z, IntegerMatrix{{2}})));
  Tower mixed = Tower::periodic(FGAbelianGroup(1, {Integer(2)}), IntegerMatrix{{1, 0}, {0, 0}});
  LimReport r = lim_report(mixed);
  CHECK(r.mittag_leffler);
  CHECK(r.lim == Z);
  CHECK(r.stabilization_stage == std::optional<std::size_t>(1));
}

TEST_CASE("lim1_vanishes examples") {
  CHECK(lim1_vanishes(Tower::periodic(Z, IntegerMatrix{{1}})));
  LimReport d = lim_report(Tower::periodic(Z, IntegerMatrix{{2}}));
  CHECK_FALSE(d.lim1_vanishes);
  CHECK(d.note == "lim¹ nonzero (not finitely generated)");
  CHECK_THROWS_AS(stable_image(Tower::periodic(Z, IntegerMatrix{{2}})), NoStabilization);
  CHECK(lim1_vanishes(Tower::periodic(Z, IntegerMatrix{{2}}).truncate(6)));
}

TEST_CASE("lim of non Mittag-Leffler towers") {
  CHECK(tower_lim(Tower::periodic(FGAbelianGroup::free(2), IntegerMatrix{{1, 0}, {0, 2}})) == Z);
  LimReport a = lim_report(Tower::periodic(FGAbelianGroup::free(2), IntegerMatrix{{2, 1}, {1, 1}}));
  CHECK(a.lim == FGAbelianGroup::free(2));
  CHECK(a.mittag_leffler);
  LimReport b = lim_report(Tower::periodic(FGAbelianGroup(1, {Integer(3)}), IntegerMatrix{{2, 0}, {1, 1}}));
  CHECK(b.lim == FGAbelianGroup::cyclic(3));
  CHECK_FALSE(b.mittag_leffler);
}

TEST_CASE("towers of finite groups are Mittag-Leffler") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 60; ++k) {
    FGAbelianGroup P = random_finite(rng);
    Tower T = Tower::periodic(P, random_hom(rng, P, P));
    T.validate();
    LimReport r = lim_report(T);
    CHECK(r.mittag_leffler);
    CHECK(r.lim1_vanishes == r.mittag_leffler);
    REQUIRE(r.stabilization_stage);
    // The limit is the stable image, seen at any depth past stabilization.
    CHECK(deep_image(T, *r.stabilization_stage + 2) == r.lim);
    CHECK(stable_image(T).group.canonical() == r.lim);
  }
}

TEST_CASE("lim1 verdict equals Mittag-Leffler on mixed towers") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> rank(0, 2);
  for (int k = 0; k < 60; ++k) {
    FGAbelianGroup P = FGAbelianGroup::free(static_cast<std::size_t>(rank(rng))) + random_finite(rng);
    Tower T = Tower::periodic(P, random_hom(rng, P, P));
    T.validate();
    LimReport r = lim_report(T);
    CHECK(r.lim1_vanishes == r.mittag_leffler);
    CHECK(r.lim1_vanishes == lim1_vanishes(T));
    if (r.mittag_leffler) {
      REQUIRE(r.stabilization_stage);
      CHECK(deep_image(T, *r.stabilization_stage + 2) == r.lim);
    } else {
      CHECK(r.note == "lim¹ nonzero (not finitely generated)");
    }
  }
}

TEST_CASE("lim is additive over direct sums") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> rank(0, 2);
  for (int k = 0; k < 40; ++k) {
    FGAbelianGroup P = FGAbelianGroup::free(static_cast<std::size_t>(rank(rng))) + random_finite(rng);
    FGAbelianGroup Q = FGAbelianGroup::free(static_cast<std::size_t>(rank(rng))) + random_finite(rng);
    Tower A = Tower::periodic(P, random_hom(rng, P, P)), B = Tower::periodic(Q, random_hom(rng, Q, Q));
    Tower S = direct_sum(A, B);
    CHECK_NOTHROW(S.validate());
    LimReport r = lim_report(S);
    CHECK(r.lim == tower_lim(A) + tower_lim(B));
    CHECK(r.mittag_leffler == (mittag_leffler(A) && mittag_leffler(B)));
  }
  Tower f = Tower::finite({FGAbelianGroup::cyclic(4), Z}, {IntegerMatrix{{1}}});
  CHECK(tower_lim(direct_sum(f, f)) == FGAbelianGroup::free(2));
}

TEST_CASE("six_term_check: identity onto a zero tower") {
  Tower T = Tower::periodic(FGAbelianGroup(1, {Integer(2)}), IntegerMatrix{{1, 0}, {0, 0}});
  Tower O = Tower::periodic(FGAbelianGroup::trivial(), IntegerMatrix(0, 0));
  TowerSequence s{T, T, O, {{}, IntegerMatrix::identity(2)}, {{}, IntegerMatrix(0, 2)}};
  SixTermReport r = six_term_check(s);
  CHECK(r.pass());
  CHECK(r.first.lim == r.middle.lim);
  CHECK(r.last.lim.is_trivial());
}

TEST_CASE("six_term_check: dyadic subtower of the constant tower") {
  const std::size_t depth = 4;
  std::vector<FGAbelianGroup> a, b, c;
  std::vector<IntegerMatrix> fa, fb, fc, i, j;
  for (std::size_t k = 1; k <= depth; ++k) {
    Integer q = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(k - 1));
    a.push_back(Z);
    b.push_back(Z);
    c.push_back(FGAbelianGroup::cyclic(q));
    i.push_back(IntegerMatrix{{q}});
    j.push_back(k == 1 ? IntegerMatrix(0, 1) : IntegerMatrix{{1}});
    if (k < depth) {
      fa.push_back(IntegerMatrix{{2}});
      fb.push_back(IntegerMatrix{{1}});
      fc.push_back(k == 1 ? IntegerMatrix(0, 1) : IntegerMatrix{{1}});
    }
  }
  TowerSequence s{Tower::finite(a, fa), Tower::finite(b, fb), Tower::finite(c, fc), {i, {}}, {j, {}}};
  SixTermReport r = six_term_check(s);
  CHECK(r.pass());
  CHECK(r.first.lim == Z);
  CHECK(r.middle.lim == Z);
  CHECK(r.last.lim == FGAbelianGroup::cyclic(8));

  TowerSequence broken = s;
  broken.i.stages[2] = IntegerMatrix{{1}};
  CHECK_THROWS_AS(six_term_check(broken), NotExactTowers);
}

TEST_CASE("six_term_check: split sum of periodic towers") {
  Tower A = Tower::periodic(Z, IntegerMatrix{{2}});
  Tower B = Tower::periodic(FGAbelianGroup(1, {Integer(2)}), IntegerMatrix{{1, 0}, {0, 0}});
  Tower S = direct_sum(A, B);
  REQUIRE(S.period == FGAbelianGroup(2, {Integer(2)}));
  // The sum lists the free generator of B first.
  REQUIRE(S.period_map == IntegerMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 0}});
  TowerSequence s{A, S, B, {{}, IntegerMatrix{{0}, {1}, {0}}}, {{}, IntegerMatrix{{1, 0, 0}, {0, 0, 1}}}};
  SixTermReport r = six_term_check(s);
  CHECK(r.pass());
  CHECK(r.middle.lim == r.first.lim + r.last.lim);
  CHECK_FALSE(r.first.mittag_leffler);
  CHECK_FALSE(r.middle.mittag_leffler);
  CHECK(r.last.mittag_leffler);
}

TEST_CASE("milnor_check examples") {
  MilnorReport c = milnor_check({Tower::periodic(Z, IntegerMatrix{{1}}), Tower::periodic(Z, IntegerMatrix{{1}})},
                                {Z, Z});
  CHECK(c.pass());
  CHECK(c.degrees[1].status == MilnorDegree::Status::Pass);

  MilnorReport s = milnor_check({Tower::periodic(Z, IntegerMatrix{{1}}), Tower::periodic(Z, IntegerMatrix{{2}})},
                                {Z, Z});
  CHECK_FALSE(s.pass());
  CHECK(s.degrees[0].status == MilnorDegree::Status::NotVerifiable);
  CHECK(s.degrees[0].message == "not desk-verifiable: lim¹ term not finitely generated");
  CHECK(s.degrees[1].status == MilnorDegree::Status::Fail);
  CHECK(s.degrees[1].lim.is_trivial());

  MilnorReport f = milnor_check({Tower::finite({Z, Z}, {IntegerMatrix{{3}}}), Tower::finite({Z}, {})}, {Z, Z}, 4);
  CHECK(f.pass());
  CHECK(f.degrees.front().degree == 4);
}

TEST_CASE("hom_ext_lim_sequence examples") {
  DirectSystem two{{}, {}, FGAbelianGroup::cyclic(2), IntegerMatrix{{1}}, {}};
  HomExtLimReport r = hom_ext_lim_sequence(two, Z);
  CHECK(r.exact);
  CHECK(r.lim1_hom_vanishes);
  CHECK(r.ext_colim == FGAbelianGroup::cyclic(2));
  CHECK(r.lim_ext == FGAbelianGroup::cyclic(2));
  CHECK(r.lim2_hom.is_trivial());

  HomExtLimReport z = hom_ext_lim_sequence(DirectSystem{{}, {}, Z, IntegerMatrix{{1}}, {}}, Z);
  CHECK(z.exact);
  CHECK(z.ext_colim.is_trivial());
  CHECK(z.lim_ext.is_trivial());

  DirectSystem prefixed{{FGAbelianGroup::cyclic(3)}, {}, FGAbelianGroup(1, {Integer(6)}), IntegerMatrix{{-1, 0}, {0, 5}},
                        IntegerMatrix{{0}, {2}}};
  HomExtLimReport p = hom_ext_lim_sequence(prefixed, FGAbelianGroup::cyclic(4));
  CHECK(p.exact);
  CHECK(p.ext_colim == ext(FGAbelianGroup(1, {Integer(6)}), FGAbelianGroup::cyclic(4)));

  CHECK_THROWS_AS(hom_ext_lim_sequence(DirectSystem{{}, {}, Z, IntegerMatrix{{2}}, {}}, Z), NotEventuallyStable);
}
