#include "ashom/coverings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "ashom/presentation.hpp"
#include "ashom/smith.hpp"

namespace ashom {
namespace {

PointSet normalized(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset(const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void check_covers(const PointSet& points, const Covering& c, const std::string& what) {
  std::set<int> seen;
  for (const auto& m : c)
    for (int x : m) {
      if (!std::binary_search(points.begin(), points.end(), x))
        throw ShapeMismatch(what + " uses point " + std::to_string(x) + " outside the space");
      seen.insert(x);
    }
  for (int x : points)
    if (!seen.count(x)) throw ShapeMismatch(what + " misses point " + std::to_string(x));
}

// Nonempty subsets of s with at most max_size elements.
void subsets_of(const PointSet& s, std::size_t max_size, std::set<PointSet>& out) {
  std::size_t n = s.size();
  if (n >= 31) throw ShapeMismatch("covering member too large to enumerate");
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) > max_size) continue;
    PointSet t;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) t.push_back(s[i]);
    out.insert(t);
  }
}

std::size_t index_of(const std::vector<PointSet>& sorted, const PointSet& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s) throw ShapeMismatch("simplex not found");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Simplicial coboundary between consecutive simplex lists.
IntegerMatrix coboundary(const std::vector<PointSet>& lower, const std::vector<PointSet>& upper) {
  IntegerMatrix d(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const PointSet& t = upper[r];
    for (std::size_t i = 0; i < t.size(); ++i) {
      PointSet face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      d(r, index_of(lower, face)) = i % 2 == 0 ? 1 : -1;
    }
  }
  return d;
}

IntegerCochainComplex complex_from_simplices(const std::vector<std::vector<PointSet>>& simplices) {
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> deltas;
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    ranks.push_back(simplices[k].size());
    deltas.push_back(k + 1 < simplices.size() ? coboundary(simplices[k], simplices[k + 1])
                                              : IntegerMatrix(0, simplices[k].size()));
  }
  return IntegerCochainComplex(0, ranks, deltas);
}

// Simplices of the Vietoris complex and the subspace complex split into the
// relative part (not in A) and the subspace part.
struct PairSimplices {
  std::vector<std::vector<PointSet>> x, a, rel;
};

PairSimplices pair_simplices(const FiniteCoveredSpace& S, const CoveringPair& p, int max_degree) {
  validate_pair(S, p);
  int top = max_degree >= 0 ? max_degree + 1 : -1;
  PairSimplices out;
  out.x = vietoris_complex(S.points, p.alpha).simplices(top);
  if (S.closed.empty()) {
    out.rel = out.x;
    out.a.assign(out.x.size(), {});
    return out;
  }
  SimplicialComplexRep A = vietoris_complex(S.closed, p.beta);
  out.a = A.simplices(top);
  out.a.resize(out.x.size());
  out.rel.resize(out.x.size());
  for (std::size_t k = 0; k < out.x.size(); ++k)
    for (const auto& s : out.x[k])
      if (!std::binary_search(out.a[k].begin(), out.a[k].end(), s)) out.rel[k].push_back(s);
  return out;
}

IntegerMatrix selection(const std::vector<PointSet>& from, const std::vector<PointSet>& to) {
  // Matrix of the map that restricts cochains on `from` simplices to `to`.
  IntegerMatrix m(to.size(), from.size());
  for (std::size_t r = 0; r < to.size(); ++r) m(r, index_of(from, to[r])) = 1;
  return m;
}

IntegerCochainComplex subcomplex_on(const std::vector<std::vector<PointSet>>& all,
                                    const std::vector<std::vector<PointSet>>& part) {
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> deltas;
  IntegerCochainComplex full = complex_from_simplices(all);
  for (std::size_t k = 0; k < part.size(); ++k) {
    ranks.push_back(part[k].size());
    if (k + 1 < part.size()) {
      IntegerMatrix d = full.delta(static_cast<int>(k));
      IntegerMatrix rows = selection(all[k + 1], part[k + 1]) * d;
      deltas.push_back(rows * selection(all[k], part[k]).transpose());
    } else {
      deltas.emplace_back(0, part[k].size());
    }
  }
  return IntegerCochainComplex(0, ranks, deltas);
}

}  // namespace

void FiniteCoveredSpace::validate() const {
  if (normalized(points) != points) throw ShapeMismatch("points must be sorted and distinct");
  if (!subset(normalized(closed), points)) throw ShapeMismatch("closed subspace is not a subset of the points");
  for (const auto& [name, c] : coverings) {
    for (const auto& m : c)
      if (m.empty()) throw ShapeMismatch("covering " + name + " has an empty member");
    // Coverings of the closed subspace may be stored next to those of X.
    PointSet pa = normalized(closed);
    bool of_closed = !pa.empty() && pa != points;
    if (of_closed) {
      try {
        check_covers(pa, c, "covering " + name);
        continue;
      } catch (const ShapeMismatch&) {
      }
    }
    check_covers(points, c, "covering " + name);
  }
}

const Covering& FiniteCoveredSpace::covering(const std::string& name) const {
  auto it = coverings.find(name);
  if (it == coverings.end()) throw UnknownCovering("unknown covering: " + name);
  return it->second;
}

CoveringPair make_covering_pair(const Covering& alpha, const Covering& beta) {
  CoveringPair p{alpha, beta, {}};
  for (const auto& v : beta) {
    PointSet nv = normalized(v);
    std::size_t k = 0;
    while (k < alpha.size() && !subset(nv, normalized(alpha[k]))) ++k;
    if (k == alpha.size()) throw NotARefinement("member " + to_string(Covering{v}) + " lies in no member of alpha");
    p.witness.push_back(k);
  }
  return p;
}

void validate_pair(const FiniteCoveredSpace& S, const CoveringPair& p) {
  check_covers(S.points, p.alpha, "alpha");
  if (p.witness.size() != p.beta.size()) throw NotARefinement("one witness per member of beta expected");
  if (S.closed.empty()) {
    if (!p.beta.empty()) throw NotARefinement("beta must be empty when A is empty");
    return;
  }
  try {
    check_covers(S.closed, p.beta, "beta");
  } catch (const ShapeMismatch& e) {
    throw NotARefinement(e.what());
  }
  for (std::size_t k = 0; k < p.beta.size(); ++k) {
    if (p.witness[k] >= p.alpha.size()) throw NotARefinement("witness index out of range");
    if (!subset(normalized(p.beta[k]), normalized(p.alpha[p.witness[k]])))
      throw NotARefinement("witness member does not contain the beta member");
  }
}

std::vector<std::vector<PointSet>> SimplicialComplexRep::simplices(int max_dim) const {
  std::size_t cap = max_dim >= 0 ? static_cast<std::size_t>(max_dim) + 1 : static_cast<std::size_t>(-1);
  std::set<PointSet> all;
  for (const auto& f : facets) subsets_of(f, cap, all);
  std::vector<std::vector<PointSet>> out;
  for (const auto& s : all) {
    if (out.size() < s.size()) out.resize(s.size());
    out[s.size() - 1].push_back(s);
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

int SimplicialComplexRep::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplexRep::contains(const PointSet& simplex) const {
  PointSet s = normalized(simplex);
  for (const auto& f : facets)
    if (subset(s, f)) return true;
  return false;
}

SimplicialComplexRep make_simplicial_complex(std::vector<int> vertices, std::vector<PointSet> faces) {
  for (auto& f : faces) f = normalized(f);
  std::sort(faces.begin(), faces.end(), [](const PointSet& a, const PointSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  std::vector<PointSet> facets;
  for (const auto& f : faces) {
    if (f.empty()) continue;
    bool dominated = false;
    for (const auto& g : facets)
      if (subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) facets.push_back(f);
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplexRep{normalized(std::move(vertices)), facets};
}

SimplicialComplexRep vietoris_complex(const PointSet& points, const Covering& alpha) {
  std::vector<PointSet> faces = alpha;
  for (int x : points) faces.push_back({x});
  return make_simplicial_complex(points, faces);
}

SimplicialComplexRep vietoris_complex(const FiniteCoveredSpace& S, const std::string& alpha) {
  return vietoris_complex(S.points, S.covering(alpha));
}

SimplicialComplexRep nerve(const Covering& alpha) {
  const std::size_t m = alpha.size();
  if (m >= 31) throw ShapeMismatch("nerve: too many members");
  std::vector<PointSet> members;
  for (const auto& a : alpha) members.push_back(normalized(a));
  std::vector<PointSet> faces;
  std::vector<int> vertices;
  for (std::size_t i = 0; i < m; ++i) vertices.push_back(static_cast<int>(i));
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    PointSet common;
    bool first = true;
    PointSet family;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (1ul << i))) continue;
      family.push_back(static_cast<int>(i));
      if (first) {
        common = members[i];
        first = false;
      } else {
        PointSet next;
        std::set_intersection(common.begin(), common.end(), members[i].begin(), members[i].end(),
                              std::back_inserter(next));
        common.swap(next);
      }
    }
    if (!common.empty()) faces.push_back(family);
  }
  return make_simplicial_complex(vertices, faces);
}

IntegerCochainComplex simplicial_cochain_complex(const SimplicialComplexRep& K, int max_degree) {
  return complex_from_simplices(K.simplices(max_degree >= 0 ? max_degree + 1 : -1));
}

IntegerCochainComplex relative_cochain_complex(const FiniteCoveredSpace& S, const CoveringPair& p, int max_degree) {
  PairSimplices s = pair_simplices(S, p, max_degree);
  return subcomplex_on(s.x, s.rel);
}

PairSequence pair_cochain_sequence(const FiniteCoveredSpace& S, const CoveringPair& p, int max_degree) {
  PairSimplices s = pair_simplices(S, p, max_degree);
  IntegerCochainComplex X = complex_from_simplices(s.x);
  IntegerCochainComplex rel = subcomplex_on(s.x, s.rel);
  IntegerCochainComplex A = subcomplex_on(s.x, s.a);
  std::map<int, IntegerMatrix> inc, res;
  for (std::size_t k = 0; k < s.x.size(); ++k) {
    inc[static_cast<int>(k)] = selection(s.x[k], s.rel[k]).transpose();
    res[static_cast<int>(k)] = selection(s.x[k], s.a[k]);
  }
  PairSequence out;
  out.inclusion = OwnedCochainMap(rel, X, inc);
  out.restriction = OwnedCochainMap(X, A, res);
  // Share one copy of X between the two maps.
  out.restriction.source = out.inclusion.target;
  out.restriction.map.source = out.inclusion.target.get();
  out.inclusion.map.validate();
  out.restriction.map.validate();
  return out;
}

ExtendedCochain extend_by_zero(const TupleCochain& phi, const PointSet& points, const Covering& alpha, int degree) {
  std::vector<PointSet> members;
  for (const auto& a : alpha) members.push_back(normalized(a));
  ExtendedCochain out;
  const std::size_t len = static_cast<std::size_t>(degree + 1);
  std::vector<int> tuple(len);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      int owner = -1;
      for (std::size_t k = 0; k < members.size() && owner < 0; ++k) {
        bool inside = true;
        for (int x : tuple)
          if (!std::binary_search(members[k].begin(), members[k].end(), x)) {
            inside = false;
            break;
          }
        if (inside) owner = static_cast<int>(k);
      }
      Integer v = 0;
      if (owner >= 0) {
        auto it = phi.find(tuple);
        if (it != phi.end()) v = it->second;
      }
      out.values[tuple] = v;
      out.member[tuple] = owner;
      return;
    }
    for (int x : points) {
      tuple[pos] = x;
      rec(pos + 1);
    }
  };
  if (degree >= 0) rec(0);
  for (const auto& [t, v] : phi)
    if (v != 0 && (!out.member.count(t) || out.member[t] < 0))
      throw ShapeMismatch("cochain is nonzero on a tuple outside every member");
  return out;
}

TupleCochain restrict_to_covering(const TupleCochain& phi, const Covering& alpha) {
  std::vector<PointSet> members;
  for (const auto& a : alpha) members.push_back(normalized(a));
  TupleCochain out;
  for (const auto& [t, v] : phi) {
    PointSet s = normalized(t);
    for (const auto& m : members)
      if (subset(s, m)) {
        out[t] = v;
        break;
      }
  }
  return out;
}

bool refines(const Covering& fine, const Covering& coarse) {
  for (const auto& f : fine) {
    PointSet nf = normalized(f);
    bool found = false;
    for (const auto& c : coarse)
      if (subset(nf, normalized(c))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

OwnedCochainMap refinement_cochain_map(const PointSet& points, const Covering& fine, const Covering& coarse,
                                       int max_degree) {
  if (!refines(fine, coarse)) throw NotARefinement("covering does not refine the coarser one");
  int top = max_degree >= 0 ? max_degree + 1 : -1;
  auto cs = vietoris_complex(points, coarse).simplices(top);
  auto fs = vietoris_complex(points, fine).simplices(top);
  std::map<int, IntegerMatrix> comps;
  for (std::size_t k = 0; k < fs.size(); ++k) comps[static_cast<int>(k)] = selection(cs[k], fs[k]);
  OwnedCochainMap out(complex_from_simplices(cs), complex_from_simplices(fs), comps);
  out.map.validate();
  return out;
}

FGAbelianGroup colimit_cohomology(const PointSet& points, const std::vector<Covering>& chain, int n) {
  if (chain.empty()) throw NotARefinement("empty refinement chain");
  // Order the chain coarse to fine.
  std::vector<Covering> order = chain;
  bool forward = true, backward = true;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    forward = forward && refines(chain[k + 1], chain[k]);
    backward = backward && refines(chain[k], chain[k + 1]);
  }
  if (!forward && !backward) throw NotARefinement("consecutive coverings are not refinements");
  if (!forward) std::reverse(order.begin(), order.end());

  // Colimit of H^n(stage 0) -> H^n(stage 1) -> ... presented as the sum of
  // all stages modulo x - f(x).
  std::vector<HomologyData> stages;
  std::vector<IntegerCochainComplex> complexes;
  for (const auto& c : order) complexes.push_back(simplicial_cochain_complex(vietoris_complex(points, c), n));
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& C : complexes) {
    IntegerMatrix z = C.cocycle_basis(n);
    IntegerMatrix b = C.delta(n - 1);
    Subquotient h = make_subquotient(z, b);
    stages.push_back({n, h, h.group.canonical()});
    offsets.push_back(total);
    total += h.group.generators();
  }
  IntegerMatrix rel(total, 0);
  for (std::size_t k = 0; k < stages.size(); ++k) {
    IntegerMatrix r(total, stages[k].cycles.group.relations().cols());
    r.set_block(offsets[k], 0, stages[k].cycles.group.relations());
    rel = hstack(rel, r);
  }
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    OwnedCochainMap f = refinement_cochain_map(points, order[k + 1], order[k], n);
    IntegerMatrix image = stages[k + 1].cycles.coordinates(f.map.component(n) * stages[k].cycles.basis);
    IntegerMatrix r(total, stages[k].cycles.basis.cols());
    r.set_block(offsets[k], 0, IntegerMatrix::identity(stages[k].cycles.basis.cols()));
    r.set_block(offsets[k + 1], 0, -image);
    rel = hstack(rel, r);
  }
  return Presentation(total, rel).canonical();
}

bool dowker_check(const PointSet& points, const Covering& alpha, int n) {
  FGAbelianGroup v = simplicial_cochain_complex(vietoris_complex(points, alpha), n).cohomology(n);
  FGAbelianGroup w = simplicial_cochain_complex(nerve(alpha), n).cohomology(n);
  return v == w;
}

namespace {

// Cohomology in degrees 0..max_degree of the complex generated by the given
// faces (bitmasks over at most 8 points).
std::vector<FGAbelianGroup> masked_cohomology(const std::vector<unsigned>& faces, int max_degree) {
  std::set<unsigned> all;
  for (unsigned f : faces)
    for (unsigned s = f; s; s = (s - 1) & f)
      if (__builtin_popcount(s) <= max_degree + 2) all.insert(s);
  std::vector<std::vector<unsigned>> levels(static_cast<std::size_t>(max_degree) + 2);
  for (unsigned s : all) levels[static_cast<std::size_t>(__builtin_popcount(s) - 1)].push_back(s);
  std::vector<std::unordered_map<unsigned, std::size_t>> index(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (std::size_t i = 0; i < levels[k].size(); ++i) index[k][levels[k][i]] = i;
  std::vector<std::vector<Integer>> diag(levels.size());
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    IntegerMatrix d(levels[k + 1].size(), levels[k].size());
    for (std::size_t r = 0; r < levels[k + 1].size(); ++r) {
      unsigned t = levels[k + 1][r];
      int sign = 1;
      for (unsigned bits = t; bits; bits &= bits - 1) {
        unsigned low = bits & (~bits + 1);
        d(r, index[k].at(t & ~low)) = sign;
        sign = -sign;
      }
    }
    diag[k] = smith_diagonal(d);
  }
  std::vector<FGAbelianGroup> out;
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t k = static_cast<std::size_t>(n);
    std::size_t rank = levels[k].size();
    std::size_t in = k > 0 ? diag[k - 1].size() : 0;
    std::size_t free = rank - diag[k].size() - in;
    out.push_back(FGAbelianGroup(free, k > 0 ? diag[k - 1] : std::vector<Integer>{}));
  }
  return out;
}

}  // namespace

DowkerSweepReport dowker_sweep(int max_points, int max_members, int max_degree) {
  DowkerSweepReport rep;
  std::map<std::vector<unsigned>, std::vector<FGAbelianGroup>> vietoris_cache;
  std::map<std::vector<unsigned>, std::vector<FGAbelianGroup>> nerve_cache;
  for (int k = 1; k <= max_points; ++k) {
    ++rep.spaces;
    const unsigned full = (1u << k) - 1;
    std::vector<unsigned> chosen;
    std::function<void(unsigned)> rec = [&](unsigned next) {
      unsigned uni = 0;
      for (unsigned m : chosen) uni |= m;
      if (!chosen.empty() && uni == full) {
        ++rep.covers;
        // Vietoris complex: maximal members plus singletons (already covered).
        std::vector<unsigned> maximal;
        for (unsigned m : chosen) {
          bool dominated = false;
          for (unsigned o : chosen)
            if (o != m && (m & o) == m) dominated = true;
          if (!dominated) maximal.push_back(m);
        }
        std::sort(maximal.begin(), maximal.end());
        auto vit = vietoris_cache.find(maximal);
        if (vit == vietoris_cache.end())
          vit = vietoris_cache.emplace(maximal, masked_cohomology(maximal, max_degree)).first;
        // Nerve: subfamilies with a common point, as masks over member indices.
        std::vector<unsigned> families;
        const std::size_t m = chosen.size();
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
          unsigned common = full;
          for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) common &= chosen[i];
          if (common) families.push_back(mask);
        }
        auto nit = nerve_cache.find(families);
        if (nit == nerve_cache.end())
          nit = nerve_cache.emplace(families, masked_cohomology(families, max_degree)).first;
        for (int n = 0; n <= max_degree; ++n) {
          ++rep.comparisons;
          if (!(vit->second[static_cast<std::size_t>(n)] == nit->second[static_cast<std::size_t>(n)])) {
            ++rep.failures;
            if (rep.failure_examples.size() < 5) {
              Covering c;
              for (unsigned mm : chosen) {
                PointSet s;
                for (int i = 0; i < k; ++i)
                  if (mm & (1u << i)) s.push_back(i);
                c.push_back(s);
              }
              rep.failure_examples.push_back(to_string(c) + " degree " + std::to_string(n));
            }
          }
        }
      }
      if (static_cast<int>(chosen.size()) == max_members) return;
      for (unsigned s = next; s <= full; ++s) {
        chosen.push_back(s);
        rec(s + 1);
        chosen.pop_back();
      }
    };
    rec(1);
  }
  return rep;
}

std::string to_string(const Covering& c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ", ";
    out += "{";
    for (std::size_t i = 0; i < c[k].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c[k][i]);
    }
    out += "}";
  }
  return out + "}";
}

}  // namespace ashom
