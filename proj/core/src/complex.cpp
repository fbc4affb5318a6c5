#include "ashom/complex.hpp"

#include <algorithm>
#include <string>

#include "ashom/smith.hpp"

namespace ashom {

IntegerCochainComplex::IntegerCochainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntegerMatrix> deltas)
    : lo_(lo), ranks_(std::move(ranks)), deltas_(std::move(deltas)) {
  if (deltas_.size() > ranks_.size()) throw DegreeMismatch("more coboundaries than degrees");
  while (deltas_.size() < ranks_.size()) {
    std::size_t i = deltas_.size();
    std::size_t next = i + 1 < ranks_.size() ? ranks_[i + 1] : 0;
    deltas_.emplace_back(next, ranks_[i]);
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    std::size_t next = i + 1 < ranks_.size() ? ranks_[i + 1] : 0;
    if (deltas_[i].rows() != next || deltas_[i].cols() != ranks_[i])
      throw DegreeMismatch("coboundary out of degree " + std::to_string(lo_ + static_cast<int>(i)) +
                           " has shape " + std::to_string(deltas_[i].rows()) + "x" +
                           std::to_string(deltas_[i].cols()) + ", expected " + std::to_string(next) + "x" +
                           std::to_string(ranks_[i]));
  }
}

std::size_t IntegerCochainComplex::rank(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

IntegerMatrix IntegerCochainComplex::delta(int n) const {
  if (n < lo_ || n > hi()) return IntegerMatrix(rank(n + 1), rank(n));
  return deltas_[static_cast<std::size_t>(n - lo_)];
}

void IntegerCochainComplex::validate() const {
  for (int n = lo_; n < hi(); ++n)
    if (!(delta(n + 1) * delta(n)).is_zero())
      throw NotAComplex(n, "delta^" + std::to_string(n + 1) + " * delta^" + std::to_string(n) + " is nonzero");
}

FGAbelianGroup IntegerCochainComplex::cohomology(int n) const {
  if (rank(n) == 0) return {};
  std::vector<Integer> out = smith_diagonal(delta(n));
  std::vector<Integer> in = smith_diagonal(delta(n - 1));
  std::size_t free = rank(n) - out.size() - in.size();
  return FGAbelianGroup(free, in);
}

IntegerMatrix IntegerCochainComplex::cocycle_basis(int n) const { return kernel_basis(delta(n)); }

IntegerCochainComplex truncate_above(const IntegerCochainComplex& C, int top) {
  if (top < C.lo()) return IntegerCochainComplex(C.lo(), {}, {});
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> deltas;
  for (int n = C.lo(); n <= std::min(top, C.hi()); ++n) {
    ranks.push_back(C.rank(n));
    deltas.push_back(n < top ? C.delta(n) : IntegerMatrix(0, C.rank(n)));
  }
  return IntegerCochainComplex(C.lo(), ranks, deltas);
}

IntegerMatrix CochainMap::component(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return IntegerMatrix(target->rank(n), source->rank(n));
}

void CochainMap::validate() const {
  int lo = std::min(source->lo(), target->lo());
  int hi = std::max(source->hi(), target->hi());
  for (const auto& [n, m] : components)
    if (m.rows() != target->rank(n) || m.cols() != source->rank(n))
      throw ShapeMismatch("cochain map component " + std::to_string(n) + " has wrong shape");
  for (int n = lo - 1; n <= hi; ++n)
    if (target->delta(n) * component(n) != component(n + 1) * source->delta(n))
      throw NotAChainMap("cochain map does not commute with coboundaries at degree " + std::to_string(n));
}

CochainMap CochainMap::identity(const IntegerCochainComplex& C) {
  CochainMap f{&C, &C, {}};
  for (int n = C.lo(); n <= C.hi(); ++n) f.components[n] = IntegerMatrix::identity(C.rank(n));
  return f;
}

CochainMap CochainMap::zero(const IntegerCochainComplex& source, const IntegerCochainComplex& target) {
  return CochainMap{&source, &target, {}};
}

OwnedCochainMap::OwnedCochainMap(IntegerCochainComplex s, IntegerCochainComplex t,
                                 std::map<int, IntegerMatrix> components)
    : source(std::make_shared<const IntegerCochainComplex>(std::move(s))),
      target(std::make_shared<const IntegerCochainComplex>(std::move(t))),
      map{source.get(), target.get(), std::move(components)} {}

CochainMap compose(const CochainMap& g, const CochainMap& f) {
  if (f.target->lo() != g.source->lo() || f.target->hi() != g.source->hi())
    throw ShapeMismatch("compose: intermediate complexes differ");
  CochainMap h{f.source, g.target, {}};
  int lo = std::min(f.source->lo(), g.target->lo());
  int hi = std::max(f.source->hi(), g.target->hi());
  for (int n = lo; n <= hi; ++n) h.components[n] = g.component(n) * f.component(n);
  return h;
}

IntegerMatrix CochainHomotopy::component(int n, const IntegerCochainComplex& source,
                                        const IntegerCochainComplex& target) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return IntegerMatrix(target.rank(n - 1), source.rank(n));
}

void validate_homotopy(const CochainMap& f, const CochainMap& g, const CochainHomotopy& D) {
  if (f.source != g.source || f.target != g.target) throw NotAHomotopy("maps have different source or target");
  const auto& C = *f.source;
  const auto& Cp = *f.target;
  for (const auto& [n, m] : D.components)
    if (m.rows() != Cp.rank(n - 1) || m.cols() != C.rank(n))
      throw NotAHomotopy("homotopy component " + std::to_string(n) + " has wrong shape");
  int lo = std::min(C.lo(), Cp.lo()) - 1;
  int hi = std::max(C.hi(), Cp.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    IntegerMatrix lhs = Cp.delta(n - 1) * D.component(n, C, Cp) + D.component(n + 1, C, Cp) * C.delta(n);
    if (lhs != f.component(n) - g.component(n))
      throw NotAHomotopy("homotopy identity fails at degree " + std::to_string(n));
  }
}

Integer coboundary_invariant_product(const IntegerCochainComplex& C) {
  Integer p = 1;
  for (int n = C.lo(); n <= C.hi(); ++n)
    for (const auto& d : smith_diagonal(C.delta(n))) p *= d;
  return p;
}

}  // namespace ashom
