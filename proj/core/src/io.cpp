#include "ashom/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ashom {
namespace {

using json = nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw ParseError(line, column, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing field \"" + key + "\"");
  return *it;
}

Integer integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(where + ": expected an integer");
}

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

int small_int(const json& j, const std::string& where) {
  Integer x = integer(j, where);
  if (x < -1000000 || x > 1000000) throw SchemaError(where + ": value out of range");
  return static_cast<int>(x);
}

int degree_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    int n = std::stoi(key, &used);
    if (used == key.size()) return n;
  } catch (const std::exception&) {
  }
  throw SchemaError(where + ": degree key \"" + key + "\" is not an integer");
}

IntegerMatrix matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
  // A matrix without columns may be written as [] whatever its row count.
  if (cols == 0 && j.empty()) return IntegerMatrix(rows, 0);
  if (j.size() != rows)
    throw SchemaError(where + ": expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  IntegerMatrix M(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(where + ": row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = integer(row[c], where);
  }
  return M;
}

json matrix_json(const IntegerMatrix& M) {
  json out = json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(integer_json(M(r, c)));
    out.push_back(row);
  }
  return out;
}

FGAbelianGroup group(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_group(j.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  const json& r = field(j, "rank", where);
  Integer rank = integer(r, where + ".rank");
  if (rank < 0) throw SchemaError(where + ": negative rank");
  std::vector<Integer> orders;
  if (j.contains("torsion")) {
    const json& t = j["torsion"];
    if (!t.is_array()) throw SchemaError(where + ": torsion must be an array");
    for (const auto& d : t) orders.push_back(integer(d, where + ".torsion"));
  }
  FGAbelianGroup G(static_cast<std::size_t>(rank), orders);
  if (G.torsion() != orders) throw SchemaError(where + ": torsion must be in canonical form d1 | d2 | ..., each >= 2");
  return G;
}

json group_json(const FGAbelianGroup& G) {
  json t = json::array();
  for (const auto& d : G.torsion()) t.push_back(integer_json(d));
  return json{{"rank", G.rank()}, {"torsion", t}};
}

PointSet point_set(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of points");
  std::set<int> seen;
  for (const auto& p : j) seen.insert(small_int(p, where));
  return PointSet(seen.begin(), seen.end());
}

Tower tower(const json& j, const std::string& where) {
  const std::string kind = [&] {
    const json& k = field(j, "kind", where);
    if (!k.is_string()) throw SchemaError(where + ": kind must be a string");
    return k.get<std::string>();
  }();
  try {
    if (kind == "finite") {
      const json& gs = field(j, "groups", where);
      if (!gs.is_array()) throw SchemaError(where + ": groups must be an array");
      std::vector<FGAbelianGroup> groups;
      for (std::size_t k = 0; k < gs.size(); ++k) groups.push_back(group(gs[k], where + ".groups"));
      std::vector<IntegerMatrix> maps;
      const json& ms = j.contains("maps") ? j["maps"] : json::array();
      if (!ms.is_array() || ms.size() + 1 != std::max<std::size_t>(groups.size(), 1))
        throw SchemaError(where + ": need one map between consecutive groups");
      for (std::size_t k = 0; k < ms.size(); ++k)
        maps.push_back(matrix(ms[k], groups[k].generator_count(), groups[k + 1].generator_count(),
                              where + ".maps[" + std::to_string(k) + "]"));
      return Tower::finite(groups, maps);
    }
    if (kind == "periodic") {
      FGAbelianGroup P = group(field(j, "group", where), where + ".group");
      IntegerMatrix f = matrix(field(j, "map", where), P.generator_count(), P.generator_count(), where + ".map");
      std::vector<FGAbelianGroup> prefix;
      std::vector<IntegerMatrix> maps;
      const json& pre = j.contains("prefix") ? j["prefix"] : json::array();
      if (!pre.is_array()) throw SchemaError(where + ": prefix must be an array");
      for (std::size_t k = 0; k < pre.size(); ++k) {
        std::string w = where + ".prefix[" + std::to_string(k) + "]";
        prefix.push_back(group(field(pre[k], "group", w), w));
        if (k > 0)
          maps.push_back(matrix(field(pre[k], "map", w), prefix[k - 1].generator_count(),
                                prefix[k].generator_count(), w + ".map"));
      }
      IntegerMatrix link;
      if (!prefix.empty())
        link = matrix(field(j, "link", where), prefix.back().generator_count(), P.generator_count(), where + ".link");
      return Tower::periodic(P, f, prefix, maps, link);
    }
  } catch (const ShapeMismatch& e) {
    throw InvariantError(where + ": " + e.what());
  } catch (const NotAChainMap& e) {
    throw InvariantError(where + ": " + e.what());
  }
  throw SchemaError(where + ": kind must be \"finite\" or \"periodic\"");
}

json tower_json(const Tower& T) {
  json out;
  if (!T.is_periodic()) {
    out["kind"] = "finite";
    out["groups"] = json::array();
    for (const auto& G : T.groups) out["groups"].push_back(group_json(G));
    out["maps"] = json::array();
    for (const auto& M : T.maps) out["maps"].push_back(matrix_json(M));
    return out;
  }
  out["kind"] = "periodic";
  out["group"] = group_json(T.period);
  out["map"] = matrix_json(T.period_map);
  out["prefix"] = json::array();
  for (std::size_t k = 0; k < T.groups.size(); ++k) {
    json e{{"group", group_json(T.groups[k])}};
    if (k > 0) e["map"] = matrix_json(T.maps[k - 1]);
    out["prefix"].push_back(e);
  }
  if (!T.groups.empty()) out["link"] = matrix_json(T.link);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntegerCochainComplex parse_complex(std::string_view text) {
  json j = parse_json(text);
  const json& ranks = field(j, "ranks", "complex");
  if (!ranks.is_object() || ranks.empty()) throw SchemaError("complex: ranks must be a nonempty object");
  std::map<int, std::size_t> r;
  for (auto it = ranks.begin(); it != ranks.end(); ++it) {
    Integer v = integer(it.value(), "complex.ranks");
    if (v < 0) throw SchemaError("complex.ranks: negative rank");
    r[degree_key(it.key(), "complex.ranks")] = static_cast<std::size_t>(v);
  }
  const int lo = r.begin()->first, hi = r.rbegin()->first;
  auto rank = [&](int n) { return r.count(n) ? r[n] : std::size_t{0}; };
  std::vector<std::size_t> rank_list;
  for (int n = lo; n <= hi; ++n) rank_list.push_back(rank(n));
  std::vector<IntegerMatrix> deltas;
  for (int n = lo; n <= hi; ++n) deltas.emplace_back(rank(n + 1), rank(n));
  if (j.contains("deltas")) {
    const json& ds = j["deltas"];
    if (!ds.is_object()) throw SchemaError("complex: deltas must be an object");
    for (auto it = ds.begin(); it != ds.end(); ++it) {
      int n = degree_key(it.key(), "complex.deltas");
      if (n < lo || n > hi) throw SchemaError("complex.deltas: degree " + it.key() + " outside the ranks");
      deltas[static_cast<std::size_t>(n - lo)] =
          matrix(it.value(), rank(n + 1), rank(n), "complex.deltas[" + it.key() + "]");
    }
  }
  IntegerCochainComplex C(lo, rank_list, deltas);
  try {
    C.validate();
  } catch (const NotAComplex& e) {
    throw InvariantError(std::string("complex: ") + e.what());
  }
  return C;
}

FiniteCoveredSpace parse_space(std::string_view text) {
  json j = parse_json(text);
  FiniteCoveredSpace S;
  S.points = point_set(field(j, "points", "space"), "space.points");
  if (j.contains("closed")) S.closed = point_set(j["closed"], "space.closed");
  const json& covers = field(j, "covers", "space");
  if (!covers.is_object()) throw SchemaError("space: covers must be an object");
  for (auto it = covers.begin(); it != covers.end(); ++it) {
    if (!it.value().is_array()) throw SchemaError("space.covers." + it.key() + ": expected an array of members");
    Covering c;
    for (const auto& m : it.value()) c.push_back(point_set(m, "space.covers." + it.key()));
    S.coverings[it.key()] = c;
  }
  try {
    S.validate();
  } catch (const ShapeMismatch& e) {
    throw SchemaError(std::string("space: ") + e.what());
  }
  return S;
}

Tower parse_tower(std::string_view text) { return tower(parse_json(text), "tower"); }

MilnorInput parse_milnor(std::string_view text) {
  json j = parse_json(text);
  MilnorInput in;
  if (j.contains("lo")) in.lo = small_int(j["lo"], "milnor.lo");
  const json& ds = field(j, "degrees", "milnor");
  if (!ds.is_array()) throw SchemaError("milnor: degrees must be an array");
  for (std::size_t k = 0; k < ds.size(); ++k) {
    std::string w = "milnor.degrees[" + std::to_string(k) + "]";
    in.towers.push_back(tower(field(ds[k], "tower", w), w + ".tower"));
    in.limits.push_back(group(field(ds[k], "limit", w), w + ".limit"));
  }
  return in;
}

GroupExtension parse_extension(std::string_view text) {
  json j = parse_json(text);
  GroupExtension S;
  S.G = group(field(j, "G", "extension"), "extension.G");
  S.G1 = group(field(j, "G1", "extension"), "extension.G1");
  S.G2 = group(field(j, "G2", "extension"), "extension.G2");
  S.phi = matrix(field(j, "phi", "extension"), S.G1.generator_count(), S.G.generator_count(), "extension.phi");
  S.psi = matrix(field(j, "psi", "extension"), S.G2.generator_count(), S.G1.generator_count(), "extension.psi");
  try {
    validate_extension(S);
  } catch (const Error& e) {
    throw InvariantError(std::string("extension: ") + e.what());
  }
  return S;
}

std::string serialize(const IntegerCochainComplex& C) {
  json ranks = json::object(), deltas = json::object();
  for (int n = C.lo(); n <= C.hi(); ++n) {
    ranks[std::to_string(n)] = C.rank(n);
    if (n < C.hi()) deltas[std::to_string(n)] = matrix_json(C.delta(n));
  }
  return dump(json{{"ranks", ranks}, {"deltas", deltas}});
}

std::string serialize(const FiniteCoveredSpace& S) {
  json covers = json::object();
  for (const auto& [name, c] : S.coverings) covers[name] = c;
  return dump(json{{"points", S.points}, {"closed", S.closed}, {"covers", covers}});
}

std::string serialize(const Tower& T) { return dump(tower_json(T)); }

}  // namespace ashom
