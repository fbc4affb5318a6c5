#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ashom/abelian.hpp"
#include "ashom/smith.hpp"

namespace ashom {

/// The group Z^generators / colspan(relations).
///
/// Elements are integer vectors of length `generators()`; two vectors name
/// the same element when they differ by a relation combination.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::size_t generators, IntegerMatrix relations);

  static Presentation free(std::size_t generators) { return Presentation(generators, IntegerMatrix(generators, 0)); }
  /// Canonical generators of G (free first, torsion after).
  static Presentation of(const FGAbelianGroup& G);

  std::size_t generators() const noexcept { return generators_; }
  const IntegerMatrix& relations() const noexcept { return relations_; }

  FGAbelianGroup canonical() const;
  bool is_zero(const IntegerVector& x) const;
  bool is_trivial() const { return canonical().is_trivial(); }

  friend Presentation direct_sum(const Presentation& a, const Presentation& b);

 private:
  std::size_t generators_ = 0;
  IntegerMatrix relations_;
  mutable std::shared_ptr<const IntegerSolver> solver_;
};

/// A subgroup of a presented group, presented on its own lattice basis.
///
/// `basis` is a Z-basis (ambient coordinates) of the lattice L of all vectors
/// representing elements of the subgroup; L always contains the ambient
/// relation lattice. `group` presents the subgroup on the columns of `basis`.
struct Subquotient {
  IntegerMatrix basis;
  Presentation group;
  std::shared_ptr<const IntegerSolver> solver;

  /// Coordinates of an ambient vector lying in L with respect to `basis`.
  IntegerVector coordinates(const IntegerVector& ambient) const;
  IntegerMatrix coordinates(const IntegerMatrix& ambient) const;
  bool contains(const IntegerVector& ambient) const;
};

/// Builds the subquotient L / relations where L = span(lattice_generators).
/// `relations` must lie in L.
Subquotient make_subquotient(const IntegerMatrix& lattice_generators, const IntegerMatrix& relations);

/// Change of coordinates from a presentation to canonical generators.
struct CanonicalBasis {
  FGAbelianGroup group;
  IntegerMatrix to_canonical;    // group.generator_count() x generators()
  IntegerMatrix from_canonical;  // generators() x group.generator_count()
};
CanonicalBasis canonical_basis(const Presentation& P);

/// Reduces the torsion rows of a matrix with values in G into [0, d).
IntegerMatrix reduce_canonical(const FGAbelianGroup& G, IntegerMatrix M);

/// Homomorphism between presented groups, given on generators.
struct Morphism {
  Presentation source;
  Presentation target;
  IntegerMatrix matrix;  // target.generators() x source.generators()

  /// Throws ShapeMismatch / NotAChainMap-style errors if the matrix does not
  /// send relations to relations.
  void validate() const;
  Subquotient kernel() const;
  /// The image as a subgroup of the target.
  Subquotient image() const;
  Presentation cokernel() const;
  bool is_zero() const;
  bool is_injective() const { return kernel().group.is_trivial(); }
  bool is_surjective() const { return cokernel().is_trivial(); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

/// {x : M x in colspan(R_target)} as a lattice basis.
IntegerMatrix preimage_lattice(const IntegerMatrix& M, const IntegerMatrix& target_relations);

/// True when span(b) + span(rel) contains span(a) + span(rel).
bool lattice_contains(const IntegerMatrix& b, const IntegerMatrix& a, const IntegerMatrix& rel);

/// Chain complex of presented groups with boundary of degree -1.
///
/// Groups outside [lo, hi] are zero. boundary(n) maps degree n to n-1.
class PresentedChainComplex {
 public:
  PresentedChainComplex() = default;
  PresentedChainComplex(int lo, std::vector<Presentation> groups, std::vector<IntegerMatrix> boundaries);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(groups_.size()) - 1; }
  const Presentation& group(int n) const;
  /// Boundary from degree n to degree n - 1 (a zero matrix off the window).
  IntegerMatrix boundary(int n) const;

  /// Throws NotAComplex if some composite boundary is nonzero in the quotient.
  void validate() const;

 private:
  int lo_ = 0;
  std::vector<Presentation> groups_;
  std::vector<IntegerMatrix> boundaries_;  // boundaries_[i]: degree lo+i -> lo+i-1
  Presentation zero_;
};

/// H_n presented on a basis of the cycle lattice.
struct HomologyData {
  int degree = 0;
  Subquotient cycles;  // cycles.group is H_n
  FGAbelianGroup group;
};

HomologyData homology(const PresentedChainComplex& C, int n);

/// Degree-0 chain map between presented chain complexes.
struct PresentedChainMap {
  const PresentedChainComplex* source = nullptr;
  const PresentedChainComplex* target = nullptr;
  std::map<int, IntegerMatrix> components;

  IntegerMatrix component(int n) const;
  /// Checks that the map respects relations and commutes with boundaries.
  void validate() const;
};

/// Matrix of the induced map H_n(source) -> H_n(target) on the homology
/// generators (cycle lattice basis coordinates).
IntegerMatrix induced_on_homology(const PresentedChainMap& f, const HomologyData& hs, const HomologyData& ht);

}  // namespace ashom
