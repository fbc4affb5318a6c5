#include "ashom/corpus.hpp"

#include <algorithm>

namespace ashom {
namespace {

IntegerCochainComplex from_faces(std::vector<int> vertices, std::vector<PointSet> faces) {
  return simplicial_cochain_complex(make_simplicial_complex(std::move(vertices), std::move(faces)));
}

std::vector<int> range(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool within(const IntegerMatrix& m, int bound) {
  for (const auto& x : m.data())
    if (abs(x) > bound) return false;
  return true;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

}  // namespace

IntegerCochainComplex point_complex() { return IntegerCochainComplex(0, {1}, {}); }

IntegerCochainComplex circle_complex() { return from_faces(range(3), {{0, 1}, {1, 2}, {0, 2}}); }

IntegerCochainComplex sphere_complex() { return from_faces(range(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

IntegerCochainComplex torus_complex() {
  std::vector<PointSet> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_faces(range(7), faces);
}

IntegerCochainComplex rp2_complex() {
  return from_faces(range(6), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

IntegerCochainComplex klein_complex() {
  // Attaching word a b a^-1 b: the 2-cell has boundary 2b.
  return IntegerCochainComplex(0, {1, 2, 1}, {IntegerMatrix(2, 1), IntegerMatrix{{0, 2}}});
}

IntegerCochainComplex interval_complex() { return from_faces(range(3), {{0, 1}, {1, 2}}); }

std::vector<NamedComplex> golden_corpus() {
  return {{"point", point_complex()}, {"circle", circle_complex()}, {"sphere", sphere_complex()},
          {"torus", torus_complex()}, {"rp2", rp2_complex()},       {"klein", klein_complex()}};
}

std::vector<FGAbelianGroup> corpus_coefficients() {
  return {FGAbelianGroup::free(1), FGAbelianGroup::cyclic(2), FGAbelianGroup::cyclic(4), FGAbelianGroup::cyclic(6),
          FGAbelianGroup(1, {Integer(2)})};
}

IntegerCochainComplex random_complex(std::mt19937_64& rng, std::size_t max_rank, int bound) {
  const int degrees = 4;
  std::vector<std::size_t> ranks(degrees, 0);
  std::vector<IntegerMatrix> deltas;
  struct Piece {
    int degree;
    int d;  // 0 for a lone Z
  };
  std::vector<Piece> pieces;
  int count = uniform(rng, 1, static_cast<int>(max_rank) * 2);
  for (int k = 0; k < count; ++k) {
    int n = uniform(rng, 0, degrees - 1);
    bool pair = n + 1 < degrees && uniform(rng, 0, 1) == 1;
    auto& rn = ranks[static_cast<std::size_t>(n)];
    if (rn >= max_rank) continue;
    if (pair) {
      auto& rn1 = ranks[static_cast<std::size_t>(n + 1)];
      if (rn1 >= max_rank) continue;
      pieces.push_back({n, uniform(rng, 1, std::min(3, bound))});
      ++rn;
      ++rn1;
    } else {
      pieces.push_back({n, 0});
      ++rn;
    }
  }
  for (int n = 0; n < degrees; ++n)
    deltas.emplace_back(n + 1 < degrees ? ranks[static_cast<std::size_t>(n + 1)] : 0,
                        ranks[static_cast<std::size_t>(n)]);
  std::vector<std::size_t> used(degrees, 0);
  for (const auto& p : pieces) {
    std::size_t i = used[static_cast<std::size_t>(p.degree)]++;
    if (p.d) {
      std::size_t j = used[static_cast<std::size_t>(p.degree + 1)]++;
      deltas[static_cast<std::size_t>(p.degree)](j, i) = p.d;
    }
  }
  // Random unimodular changes of basis, one elementary step at a time.
  for (int step = 0; step < 40; ++step) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 0, degrees - 1));
    std::size_t r = ranks[n];
    if (r < 2) continue;
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 2));
    if (j >= i) ++j;
    int c = uniform(rng, 0, 1) ? 1 : -1;
    // Basis change E = I + c e_j e_i^T on C^n: delta^n <- delta^n E and
    // delta^{n-1} <- E^{-1} delta^{n-1}.
    IntegerMatrix out = deltas[n];
    for (std::size_t row = 0; row < out.rows(); ++row) out(row, i) += c * out(row, j);
    IntegerMatrix in = n > 0 ? deltas[n - 1] : IntegerMatrix();
    if (n > 0)
      for (std::size_t col = 0; col < in.cols(); ++col) in(j, col) -= c * in(i, col);
    if (!within(out, bound) || (n > 0 && !within(in, bound))) continue;
    deltas[n] = out;
    if (n > 0) deltas[n - 1] = in;
  }
  IntegerCochainComplex C(0, ranks, deltas);
  C.validate();
  return C;
}

FGAbelianGroup random_group(std::mt19937_64& rng) {
  std::size_t rank = static_cast<std::size_t>(uniform(rng, 0, 2));
  std::vector<Integer> orders;
  int t = uniform(rng, 0, 2);
  for (int k = 0; k < t; ++k) orders.emplace_back(uniform(rng, 2, 12));
  return FGAbelianGroup(rank, orders);
}

HomotopyTriple prism_example() {
  auto C = std::make_shared<const IntegerCochainComplex>(interval_complex());
  HomotopyTriple t{"prism", C, C, CochainMap::identity(*C), CochainMap{C.get(), C.get(), {}}, {}};
  // g sends vertex 2 to vertex 1; the edge 12 collapses.
  t.g.components[0] = IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}};
  t.g.components[1] = IntegerMatrix{{1, 0}, {0, 0}};
  // D_0(v) is the edge from g(v) to f(v); D^1 is its transpose.
  t.D.components[1] = IntegerMatrix{{0, 0}, {0, 0}, {0, 1}};
  validate_homotopy(t.f, t.g, t.D);
  return t;
}

HomotopyTriple random_homotopy_triple(std::mt19937_64& rng) {
  IntegerCochainComplex base = random_complex(rng, 4, 3);
  int kind = uniform(rng, 0, 2);
  HomotopyTriple t;
  auto C = std::make_shared<const IntegerCochainComplex>(base);
  std::shared_ptr<const IntegerCochainComplex> T = C;
  std::map<int, IntegerMatrix> g;
  if (kind == 2) {
    // g is the inclusion of C into C (+) C2.
    IntegerCochainComplex other = random_complex(rng, 3, 3);
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> deltas;
    for (int n = 0; n <= 3; ++n) {
      ranks.push_back(base.rank(n) + other.rank(n));
      deltas.push_back(direct_sum(base.delta(n), other.delta(n)));
    }
    T = std::make_shared<const IntegerCochainComplex>(IntegerCochainComplex(0, ranks, deltas));
    for (int n = 0; n <= 3; ++n)
      g[n] = vstack(IntegerMatrix::identity(base.rank(n)), IntegerMatrix(other.rank(n), base.rank(n)));
  } else if (kind == 1) {
    for (int n = 0; n <= 3; ++n) g[n] = IntegerMatrix::identity(base.rank(n));
  }
  t.name = kind == 0 ? "zero" : kind == 1 ? "identity" : "inclusion";
  t.source = C;
  t.target = T;
  t.g = CochainMap{C.get(), T.get(), g};
  for (int n = 1; n <= 3; ++n) t.D.components[n] = random_matrix(rng, T->rank(n - 1), C->rank(n), 2);
  t.f = CochainMap{C.get(), T.get(), {}};
  for (int n = 0; n <= 3; ++n)
    t.f.components[n] = t.g.component(n) + T->delta(n - 1) * t.D.component(n, *C, *T) +
                        t.D.component(n + 1, *C, *T) * C->delta(n);
  t.f.validate();
  t.g.validate();
  validate_homotopy(t.f, t.g, t.D);
  return t;
}

FiniteCoveredSpace circle_space() {
  FiniteCoveredSpace S;
  S.points = range(6);
  S.coverings["arcs"] = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
  S.coverings["six"] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  S.coverings["singletons"] = {{0}, {1}, {2}, {3}, {4}, {5}};
  S.coverings["whole"] = {range(6)};
  return S;
}

std::vector<NamedPair> pair_corpus() {
  std::vector<NamedPair> out;
  auto add = [&](std::string name, PointSet X, PointSet A, Covering alpha, Covering beta) {
    FiniteCoveredSpace S;
    S.points = std::move(X);
    S.closed = std::move(A);
    S.coverings["alpha"] = alpha;
    if (!beta.empty()) S.coverings["beta"] = beta;
    out.push_back({std::move(name), S, make_covering_pair(alpha, beta)});
  };
  add("interval-endpoints", {0, 1, 2}, {0, 2}, {{0, 1}, {1, 2}}, {{0}, {2}});
  add("triangle-boundary", {0, 1, 2}, {0, 1, 2}, {{0, 1, 2}}, {{0, 1}, {1, 2}, {0, 2}});
  add("circle-empty", range(6), {}, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, {});
  add("circle-whole", range(6), range(6), {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
  add("circle-point", range(6), {0}, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, {{0}});
  add("circle-three-points", range(6), {0, 2, 4}, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, {{0}, {2}, {4}});
  add("circle-antipodes", range(6), {0, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}, {{0}, {3}});
  add("sphere-disk", range(4), {0, 1, 2}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {{0, 1, 2}});
  add("sphere-equator", range(4), {0, 1, 2}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
      {{0, 1}, {1, 2}, {0, 2}});
  add("interval-endpoint", {0, 1, 2}, {2}, {{0, 1}, {1, 2}}, {{2}});
  add("two-components", {0, 1, 2, 3}, {1, 2}, {{0, 1}, {2, 3}}, {{1}, {2}});
  add("disk-point", {0, 1, 2}, {1}, {{0, 1, 2}}, {{1}});
  return out;
}

}  // namespace ashom
