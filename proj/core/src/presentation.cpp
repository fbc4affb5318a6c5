#include "ashom/presentation.hpp"

#include <string>

namespace ashom {

Presentation::Presentation(std::size_t generators, IntegerMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) {
    if (relations_.rows() == 0 && relations_.cols() == 0)
      relations_ = IntegerMatrix(generators_, 0);
    else
      throw ShapeMismatch("presentation: relation matrix has wrong row count");
  }
}

Presentation Presentation::of(const FGAbelianGroup& G) {
  std::vector<Integer> d(G.rank(), Integer(0));
  d.insert(d.end(), G.torsion().begin(), G.torsion().end());
  IntegerMatrix rel(d.size(), G.torsion().size());
  for (std::size_t j = 0; j < G.torsion().size(); ++j) rel(G.rank() + j, j) = G.torsion()[j];
  return Presentation(d.size(), rel);
}

FGAbelianGroup Presentation::canonical() const { return cokernel(relations_); }

bool Presentation::is_zero(const IntegerVector& x) const {
  if (x.size() != generators_) throw ShapeMismatch("presentation: element has wrong length");
  bool all_zero = true;
  for (const auto& v : x)
    if (v != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return true;
  if (!solver_) solver_ = std::make_shared<IntegerSolver>(relations_);
  return solver_->in_span(x);
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  return Presentation(a.generators_ + b.generators_, ashom::direct_sum(a.relations_, b.relations_));
}

CanonicalBasis canonical_basis(const Presentation& P) {
  const std::size_t g = P.generators();
  SmithDecomposition s = smith_normal_form(P.relations());
  // y = U x; y_i is defined modulo the i-th diagonal entry.
  std::vector<std::size_t> order;
  for (std::size_t i = s.rank; i < g; ++i) order.push_back(i);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (abs(s.S(i, i)) != 1) order.push_back(i);
  CanonicalBasis out;
  out.group = P.canonical();
  out.to_canonical = IntegerMatrix(order.size(), g);
  out.from_canonical = IntegerMatrix(g, order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t j = 0; j < g; ++j) {
      out.to_canonical(k, j) = s.U(order[k], j);
      out.from_canonical(j, k) = s.U_inverse(j, order[k]);
    }
  return out;
}

IntegerMatrix reduce_canonical(const FGAbelianGroup& G, IntegerMatrix M) {
  if (M.rows() != G.generator_count()) throw ShapeMismatch("reduce_canonical: row count");
  for (std::size_t t = 0; t < G.torsion().size(); ++t)
    for (std::size_t c = 0; c < M.cols(); ++c) M(G.rank() + t, c) = mod(M(G.rank() + t, c), G.torsion()[t]);
  return M;
}

IntegerVector Subquotient::coordinates(const IntegerVector& ambient) const { return solver->solve_or_throw(ambient); }

IntegerMatrix Subquotient::coordinates(const IntegerMatrix& ambient) const {
  IntegerMatrix out(basis.cols(), ambient.cols());
  for (std::size_t j = 0; j < ambient.cols(); ++j) out.set_column(j, coordinates(ambient.column(j)));
  return out;
}

bool Subquotient::contains(const IntegerVector& ambient) const { return solver->in_span(ambient); }

Subquotient make_subquotient(const IntegerMatrix& lattice_generators, const IntegerMatrix& relations) {
  Subquotient s;
  s.basis = image_basis(lattice_generators);
  s.solver = std::make_shared<IntegerSolver>(s.basis);
  IntegerMatrix coords(s.basis.cols(), relations.cols());
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    auto c = s.solver->solve(relations.column(j));
    if (!c) throw NoSolution("subquotient: relation outside lattice");
    coords.set_column(j, *c);
  }
  s.group = Presentation(s.basis.cols(), coords);
  return s;
}

IntegerMatrix preimage_lattice(const IntegerMatrix& M, const IntegerMatrix& target_relations) {
  if (M.rows() != target_relations.rows()) throw ShapeMismatch("preimage_lattice: row mismatch");
  if (M.rows() == 0) return IntegerMatrix::identity(M.cols());
  IntegerMatrix K = kernel_basis(hstack(M, target_relations));
  return image_basis(K.block(0, 0, M.cols(), K.cols()));
}

bool lattice_contains(const IntegerMatrix& b, const IntegerMatrix& a, const IntegerMatrix& rel) {
  IntegerSolver solver(hstack(b, rel));
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!solver.in_span(a.column(j))) return false;
  return true;
}

void Morphism::validate() const {
  if (matrix.rows() != target.generators() || matrix.cols() != source.generators())
    throw ShapeMismatch("morphism: matrix shape does not match presentations");
  IntegerMatrix image = matrix * source.relations();
  for (std::size_t j = 0; j < image.cols(); ++j)
    if (!target.is_zero(image.column(j))) throw ShapeMismatch("morphism: relations are not preserved");
}

Subquotient Morphism::kernel() const {
  return make_subquotient(preimage_lattice(matrix, target.relations()), source.relations());
}

Subquotient Morphism::image() const {
  return make_subquotient(hstack(matrix, target.relations()), target.relations());
}

Presentation Morphism::cokernel() const {
  return Presentation(target.generators(), hstack(target.relations(), matrix));
}

bool Morphism::is_zero() const {
  for (std::size_t j = 0; j < matrix.cols(); ++j)
    if (!target.is_zero(matrix.column(j))) return false;
  return true;
}

PresentedChainComplex::PresentedChainComplex(int lo, std::vector<Presentation> groups,
                                             std::vector<IntegerMatrix> boundaries)
    : lo_(lo), groups_(std::move(groups)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != groups_.size()) throw ShapeMismatch("chain complex: one boundary per degree expected");
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    int n = lo_ + static_cast<int>(i);
    std::size_t below = group(n - 1).generators();
    if (boundaries_[i].rows() != below || boundaries_[i].cols() != groups_[i].generators())
      throw ShapeMismatch("chain complex: boundary " + std::to_string(n) + " has wrong shape");
  }
}

const Presentation& PresentedChainComplex::group(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return groups_[static_cast<std::size_t>(n - lo_)];
}

IntegerMatrix PresentedChainComplex::boundary(int n) const {
  if (n < lo_ || n > hi()) return IntegerMatrix(group(n - 1).generators(), group(n).generators());
  return boundaries_[static_cast<std::size_t>(n - lo_)];
}

void PresentedChainComplex::validate() const {
  for (int n = lo_; n <= hi(); ++n) {
    Morphism d{group(n), group(n - 1), boundary(n)};
    d.validate();
    IntegerMatrix dd = boundary(n - 1) * boundary(n);
    for (std::size_t j = 0; j < dd.cols(); ++j)
      if (!group(n - 2).is_zero(dd.column(j)))
        throw NotAComplex(n, "boundary squared is nonzero at degree " + std::to_string(n));
  }
}

HomologyData homology(const PresentedChainComplex& C, int n) {
  HomologyData h;
  h.degree = n;
  const Presentation& g = C.group(n);
  IntegerMatrix z = preimage_lattice(C.boundary(n), C.group(n - 1).relations());
  IntegerMatrix b = hstack(C.boundary(n + 1), g.relations());
  h.cycles = make_subquotient(z, b);
  h.group = h.cycles.group.canonical();
  return h;
}

IntegerMatrix PresentedChainMap::component(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return IntegerMatrix(target->group(n).generators(), source->group(n).generators());
}

void PresentedChainMap::validate() const {
  int lo = std::min(source->lo(), target->lo()) - 1;
  int hi = std::max(source->hi(), target->hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    IntegerMatrix f = component(n);
    if (f.rows() != target->group(n).generators() || f.cols() != source->group(n).generators())
      throw ShapeMismatch("chain map: component " + std::to_string(n) + " has wrong shape");
    Morphism{source->group(n), target->group(n), f}.validate();
    IntegerMatrix lhs = target->boundary(n) * f;
    IntegerMatrix rhs = component(n - 1) * source->boundary(n);
    IntegerMatrix diff = lhs - rhs;
    for (std::size_t j = 0; j < diff.cols(); ++j)
      if (!target->group(n - 1).is_zero(diff.column(j)))
        throw NotAChainMap("chain map does not commute with the boundary at degree " + std::to_string(n));
  }
}

IntegerMatrix induced_on_homology(const PresentedChainMap& f, const HomologyData& hs, const HomologyData& ht) {
  IntegerMatrix image = f.component(hs.degree) * hs.cycles.basis;
  return ht.cycles.coordinates(image);
}

}  // namespace ashom
