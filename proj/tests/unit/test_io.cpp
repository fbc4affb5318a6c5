#include <string>

#include "ashom/corpus.hpp"
#include "ashom/io.hpp"
#include "doctest.h"

using namespace ashom;

namespace {

std::string data(const std::string& name) { return read_file(std::string(ASHOM_DATA_DIR) + "/" + name); }

}  // namespace

TEST_CASE("parse_complex") {
  IntegerCochainComplex C = parse_complex(data("circle.cplx"));
  CHECK(C.cohomology(0) == FGAbelianGroup::free(1));
  CHECK(C.cohomology(1) == FGAbelianGroup::free(1));
  CHECK(parse_complex(data("rp2.cplx")) == rp2_complex());
  CHECK(parse_complex(data("klein.cplx")) == klein_complex());

  IntegerCochainComplex S = parse_complex(R"({"ranks": {"0": 1, "1": 1}, "deltas": {"0": [[0]]}})");
  CHECK(S.rank(1) == 1);
  IntegerCochainComplex shifted = parse_complex(R"({"ranks": {"-1": 1, "0": 1}, "deltas": {"-1": [[3]]}})");
  CHECK(shifted.lo() == -1);
  CHECK(shifted.cohomology(0) == FGAbelianGroup::cyclic(3));
}

TEST_CASE("parse_complex errors") {
  CHECK_THROWS_AS(parse_complex(data("invalid/not_a_complex.cplx")), InvariantError);
  try {
    parse_complex(data("invalid/malformed.cplx"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_complex(R"({"deltas": {}})"), SchemaError);
  CHECK_THROWS_AS(parse_complex(R"({"ranks": {"0": 2, "1": 1}, "deltas": {"0": [[1]]}})"), SchemaError);
  CHECK_THROWS_AS(parse_complex(R"({"ranks": {"zero": 1}})"), SchemaError);
  CHECK_THROWS_AS(parse_complex(R"({"ranks": {"0": -1}})"), SchemaError);
  CHECK_THROWS_AS(read_file("/nonexistent/file.cplx"), FileError);
}

TEST_CASE("parse_space") {
  FiniteCoveredSpace S = parse_space(data("circle.space"));
  CHECK(S.points.size() == 6);
  CHECK(S.covering("arcs") == circle_space().covering("arcs"));
  FiniteCoveredSpace I = parse_space(data("interval.space"));
  CHECK(I.closed == PointSet{0, 2});
  CHECK(I.covering("beta") == Covering{{0}, {2}});
  CHECK_THROWS_AS(parse_space(data("invalid/uncovered_point.space")), SchemaError);
  CHECK_THROWS_AS(parse_space(R"({"points": [0], "covers": {"a": [[1]]}})"), SchemaError);
  CHECK_THROWS_AS(parse_space(R"({"covers": {}})"), SchemaError);
}

TEST_CASE("parse_tower") {
  Tower d = parse_tower(data("dyadic.tower"));
  CHECK(d == Tower::periodic(FGAbelianGroup::free(1), IntegerMatrix{{2}}));
  Tower m = parse_tower(data("mixed.tower"));
  CHECK(m.is_periodic());
  CHECK(m.groups == std::vector<FGAbelianGroup>{FGAbelianGroup::cyclic(2)});
  CHECK(m.link == IntegerMatrix{{1, 1}});
  Tower f = parse_tower(R"({"kind": "finite", "groups": ["Z", "Z/4"], "maps": [[[0]]]})");
  CHECK_FALSE(f.is_periodic());
  CHECK(f.groups.back() == FGAbelianGroup::cyclic(4));
  CHECK_THROWS_AS(parse_tower(R"({"kind": "finite", "groups": ["Z/4", "Z/2"], "maps": [[[1]]]})"), InvariantError);
  CHECK_THROWS_AS(parse_tower(R"({"kind": "spiral"})"), SchemaError);
  CHECK_THROWS_AS(parse_tower(R"({"kind": "periodic", "group": {"rank": 1, "torsion": [6, 2]}, "map": [[1]]})"),
                  SchemaError);
}

TEST_CASE("parse_milnor and parse_extension") {
  MilnorInput mi = parse_milnor(data("solenoid.milnor"));
  CHECK(mi.lo == 0);
  REQUIRE(mi.towers.size() == 2);
  CHECK(mi.limits[1] == FGAbelianGroup::free(1));
  CHECK(mi.towers[1].period_map == IntegerMatrix{{2}});
  GroupExtension e = parse_extension(data("z2.ses"));
  CHECK(e.G2 == FGAbelianGroup::cyclic(2));
  CHECK(e.phi == IntegerMatrix{{2}});
  CHECK_THROWS_AS(parse_extension(R"({"G": "Z", "G1": "Z", "G2": "Z/3", "phi": [[2]], "psi": [[1]]})"),
                  InvariantError);
}

TEST_CASE("serialize round trips") {
  for (const char* name : {"circle.cplx", "rp2.cplx", "torus.cplx", "klein.cplx"}) {
    CAPTURE(name);
    IntegerCochainComplex C = parse_complex(data(name));
    std::string s = serialize(C);
    CHECK(parse_complex(s) == C);
    CHECK(serialize(parse_complex(s)) == s);
    CHECK(s == data(name));
  }
  for (const char* name : {"circle.space", "interval.space"}) {
    CAPTURE(name);
    FiniteCoveredSpace S = parse_space(data(name));
    std::string s = serialize(S);
    CHECK(serialize(parse_space(s)) == s);
  }
  for (const char* name : {"dyadic.tower", "constant.tower", "mixed.tower", "truncated.tower"}) {
    CAPTURE(name);
    std::string text = data(name);
    CHECK(serialize(parse_tower(text)) == text);
  }
  for (const auto& [name, C] : golden_corpus()) CHECK(parse_complex(serialize(C)) == C);
  CHECK(serialize(parse_space(serialize(circle_space()))) == serialize(circle_space()));
}
