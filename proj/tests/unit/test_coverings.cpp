
#include <algorithm>
#include <numeric>
#include <random>

#include "ashom/corpus.hpp"
#include "ashom/presentation.hpp"
#include "doctest.h"

using namespace ashom;

namespace {

const Covering arcs = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
const Covering six = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
const Covering singletons = {{0}, {1}, {2}, {3}, {4}, {5}};
const PointSet hexagon = {0, 1, 2, 3, 4, 5};

Subquotient cohomology_of(const IntegerCochainComplex& C, int n) {
  return make_subquotient(C.cocycle_basis(n), C.delta(n - 1));
}

// Matrix of f^* on H^n in the cocycle bases.
IntegerMatrix on_cohomology(const OwnedCochainMap& f, int n) {
  Subquotient hs = cohomology_of(*f.source, n), ht = cohomology_of(*f.target, n);
  return ht.coordinates(f.map.component(n) * hs.basis);
}

Covering random_cover(std::mt19937_64& rng, int points, int members) {
  std::uniform_int_distribution<int> bit(0, 2);
  Covering c(static_cast<std::size_t>(members));
  for (int x = 0; x < points; ++x) {
    bool placed = false;
    for (auto& m : c)
      if (bit(rng) == 0) {
        m.push_back(x);
        placed = true;
      }
    if (!placed) c[static_cast<std::size_t>(x % members)].push_back(x);
  }
  for (auto& m : c) std::sort(m.begin(), m.end());
  c.erase(std::remove_if(c.begin(), c.end(), [](const PointSet& m) { return m.empty(); }), c.end());
  return c;
}

}  // namespace

TEST_CASE("covered space validation") {
  FiniteCoveredSpace S = circle_space();
  CHECK_NOTHROW(S.validate());
  CHECK_THROWS_AS(S.covering("missing"), UnknownCovering);
  S.coverings["gap"] = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(S.validate(), ShapeMismatch);
  FiniteCoveredSpace T = circle_space();
  T.closed = {7};
  CHECK_THROWS_AS(T.validate(), ShapeMismatch);
  CHECK_THROWS_AS(make_covering_pair({{0, 1}, {1, 2}}, {{0, 2}}), NotARefinement);
  CoveringPair p = make_covering_pair({{0, 1, 2}, {0, 1}}, {{0, 1}});
  CHECK(p.witness == std::vector<std::size_t>{0});
}

TEST_CASE("vietoris_complex examples") {
  SimplicialComplexRep V = vietoris_complex(circle_space(), "arcs");
  CHECK(V.vertices == hexagon);
  CHECK(V.facets == std::vector<PointSet>{{0, 1, 2}, {0, 4, 5}, {2, 3, 4}});
  CHECK(vietoris_complex(hexagon, {hexagon}).facets == std::vector<PointSet>{hexagon});
  SimplicialComplexRep pt = vietoris_complex({7}, {{7}});
  CHECK(pt.vertices == std::vector<int>{7});
  CHECK(pt.facets == std::vector<PointSet>{{7}});
  CHECK_THROWS_AS(vietoris_complex(circle_space(), "missing"), UnknownCovering);
}

TEST_CASE("nerve examples") {
  SimplicialComplexRep N = nerve(arcs);
  auto s = N.simplices();
  CHECK(s[0].size() == 3);
  CHECK(s[1].size() == 3);
  CHECK((s.size() < 3 || s[2].empty()));
  CHECK(nerve({hexagon}).simplices()[0].size() == 1);
  SimplicialComplexRep two = nerve({{0}, {1}});
  CHECK(two.simplices()[0].size() == 2);
  CHECK(two.dimension() == 0);
}

TEST_CASE("simplicial complexes are closed under faces") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    Covering c = random_cover(rng, 6, 4);
    for (const auto& K : {vietoris_complex(hexagon, c), nerve(c)}) {
      for (const auto& layer : K.simplices())
        for (const auto& s : layer) {
          CHECK(K.contains(s));
          for (std::size_t drop = 0; s.size() > 1 && drop < s.size(); ++drop) {
            PointSet face = s;
            face.erase(face.begin() + static_cast<long>(drop));
            CHECK(K.contains(face));
          }
        }
      CHECK_NOTHROW(simplicial_cochain_complex(K).validate());
    }
  }
}

TEST_CASE("simplicial_cochain_complex examples") {
  IntegerCochainComplex C = simplicial_cochain_complex(make_simplicial_complex({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(C.rank(0) == 3);
  CHECK(C.rank(1) == 3);
  CHECK(C.cohomology(0) == FGAbelianGroup::free(1));
  CHECK(C.cohomology(1) == FGAbelianGroup::free(1));
  IntegerCochainComplex D = simplicial_cochain_complex(make_simplicial_complex({0, 1, 2, 3}, {{0, 1, 2, 3}}));
  CHECK(D.cohomology(0) == FGAbelianGroup::free(1));
  for (int n = 1; n <= 3; ++n) CHECK(D.cohomology(n).is_trivial());
  CHECK(simplicial_cochain_complex(make_simplicial_complex({0}, {{0}})).cohomology(0) == FGAbelianGroup::free(1));
}

TEST_CASE("relative_cochain_complex examples") {
  FiniteCoveredSpace S = circle_space();
  CoveringPair empty = make_covering_pair(arcs, {});
  CHECK(relative_cochain_complex(S, empty) == simplicial_cochain_complex(vietoris_complex(hexagon, arcs)));

  NamedPair interval = pair_corpus()[0];
  REQUIRE(interval.name == "interval-endpoints");
  IntegerCochainComplex R = relative_cochain_complex(interval.space, interval.pair);
  CHECK(R.cohomology(0).is_trivial());
  CHECK(R.cohomology(1) == FGAbelianGroup::free(1));

  FiniteCoveredSpace W = circle_space();
  W.closed = hexagon;
  IntegerCochainComplex Z = relative_cochain_complex(W, make_covering_pair(arcs, arcs));
  for (int n = Z.lo(); n <= Z.hi(); ++n) CHECK(Z.rank(n) == 0);

  FiniteCoveredSpace bad = interval.space;
  CoveringPair wrong = interval.pair;
  wrong.witness = {1, 1};
  CHECK_THROWS_AS(validate_pair(bad, wrong), NotARefinement);
}

TEST_CASE("pair sequences are exact in every degree") {
  for (const auto& p : pair_corpus()) {
    CAPTURE(p.name);
    PairSequence ps = pair_cochain_sequence(p.space, p.pair);
    const auto &rel = *ps.inclusion.source, &abs = *ps.inclusion.target, &sub = *ps.restriction.target;
    for (int n = abs.lo(); n <= abs.hi(); ++n) {
      IntegerMatrix i = ps.inclusion.map.component(n), r = ps.restriction.map.component(n);
      CHECK(rel.rank(n) + sub.rank(n) == abs.rank(n));
      CHECK((r * i).is_zero());
      auto free = [](std::size_t k) { return Presentation::free(k); };
      Morphism inc{free(rel.rank(n)), free(abs.rank(n)), i}, res{free(abs.rank(n)), free(sub.rank(n)), r};
      CHECK(inc.is_injective());
      CHECK(res.is_surjective());
      CHECK(inc.cokernel().canonical().torsion().empty());
    }
  }
}

TEST_CASE("extend_by_zero examples") {
  CHECK(extend_by_zero({}, hexagon, arcs, 1).values == [] {
    TupleCochain z;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) z[{a, b}] = 0;
    return z;
  }());

  TupleCochain phi{{{0, 1}, 1}};
  ExtendedCochain e = extend_by_zero(phi, hexagon, arcs, 1);
  CHECK(e.values.size() == 36);
  CHECK(e.values.at({0, 1}) == 1);
  CHECK(e.member.at({0, 1}) == 0);
  CHECK(e.values.at({0, 3}) == 0);
  CHECK(e.member.at({0, 3}) == -1);
  CHECK(e.member.at({1, 3}) == -1);
  CHECK(e.member.at({2, 2}) == 0);  // lowest index wins on overlaps
  CHECK(e.member.at({4, 0}) == 2);
  for (const auto& [t, m] : e.member)
    if (m < 0) CHECK(e.values.at(t) == 0);
  TupleCochain back = restrict_to_covering(e.values, arcs);
  for (const auto& [t, v] : back) CHECK(v == (t == std::vector<int>{0, 1} ? 1 : 0));

  TupleCochain psi{{{0, 3}, 2}, {{5, 1}, -1}};
  CHECK(extend_by_zero(psi, hexagon, {hexagon}, 1).values.at({0, 3}) == 2);
  CHECK(extend_by_zero(psi, hexagon, {hexagon}, 1).values.at({5, 1}) == -1);
  CHECK_THROWS_AS(extend_by_zero(psi, hexagon, arcs, 1), ShapeMismatch);
}

TEST_CASE("refinement_cochain_map examples") {
  OwnedCochainMap id = refinement_cochain_map(hexagon, arcs, arcs);
  for (int n = id.source->lo(); n <= id.source->hi(); ++n)
    CHECK(id.map.component(n) == IntegerMatrix::identity(id.source->rank(n)));

  OwnedCochainMap f = refinement_cochain_map(hexagon, six, arcs);
  for (int n = 0; n <= 1; ++n) {
    Subquotient hs = cohomology_of(*f.source, n), ht = cohomology_of(*f.target, n);
    CHECK(hs.group.canonical() == FGAbelianGroup::free(1));
    CHECK(Morphism{hs.group, ht.group, on_cohomology(f, n)}.is_isomorphism());
  }

  OwnedCochainMap s = refinement_cochain_map(hexagon, singletons, arcs);
  CHECK(s.target->rank(0) == 6);
  for (int n = 1; n <= s.source->hi(); ++n) CHECK(s.map.component(n).is_zero());

  CHECK_THROWS_AS(refinement_cochain_map(hexagon, arcs, six), NotARefinement);
  CHECK(refines(six, arcs));
  CHECK_FALSE(refines(arcs, six));
}

TEST_CASE("refinement maps are functorial on cohomology") {
  const Covering pairs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  const std::vector<std::vector<Covering>> chains = {
      {{hexagon}, arcs, six},
      {arcs, six, singletons},
      {{hexagon}, {{0, 1, 2, 3}, {3, 4, 5, 0}}, pairs},
  };
  for (const auto& chain : chains)
    for (int n = 0; n <= 1; ++n) {
      OwnedCochainMap a = refinement_cochain_map(hexagon, chain[1], chain[0], n);
      OwnedCochainMap b = refinement_cochain_map(hexagon, chain[2], chain[1], n);
      OwnedCochainMap c = refinement_cochain_map(hexagon, chain[2], chain[0], n);
      Subquotient hs = cohomology_of(*c.source, n), ht = cohomology_of(*c.target, n);
      IntegerMatrix diff = on_cohomology(c, n) - on_cohomology(b, n) * on_cohomology(a, n);
      CHECK(Morphism{hs.group, ht.group, diff}.is_zero());
    }
}

TEST_CASE("colimit_cohomology examples") {
  CHECK(colimit_cohomology(hexagon, {arcs}, 1) == FGAbelianGroup::free(1));
  CHECK(colimit_cohomology(hexagon, {arcs, six}, 1) == FGAbelianGroup::free(1));
  CHECK(colimit_cohomology(hexagon, {six, arcs}, 1) == FGAbelianGroup::free(1));
  CHECK(colimit_cohomology(hexagon, {arcs, six, singletons}, 1).is_trivial());
  CHECK(colimit_cohomology(hexagon, {arcs, six, singletons}, 0) == FGAbelianGroup::free(6));
  CHECK_THROWS_AS(colimit_cohomology(hexagon, {}, 0), NotARefinement);
  CHECK_THROWS_AS(colimit_cohomology(hexagon, {arcs, {{0, 1, 2, 3}, {3, 4, 5, 0}}}, 0), NotARefinement);
}

TEST_CASE("dowker_check examples") {
  CHECK(dowker_check(hexagon, arcs, 0));
  CHECK(dowker_check(hexagon, arcs, 1));
  CHECK(simplicial_cochain_complex(nerve(arcs)).cohomology(1) == FGAbelianGroup::free(1));
  for (int n = 0; n <= 3; ++n) CHECK(dowker_check(hexagon, {hexagon}, n));
}

TEST_CASE("dowker comparison on sampled covers of spaces up to 8 points") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> points(1, 8), members(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    int k = points(rng);
    PointSet X(static_cast<std::size_t>(k));
    std::iota(X.begin(), X.end(), 0);
    Covering c = random_cover(rng, k, members(rng));
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(to_string(c));
      CHECK(dowker_check(X, c, n));
    }
  }
}

TEST_CASE("dowker_sweep on small spaces") {
  DowkerSweepReport r = dowker_sweep(4, 3, 2);
  CHECK(r.failures == 0);
  CHECK(r.spaces == 4);
  CHECK(r.comparisons == r.covers * 3);
}
