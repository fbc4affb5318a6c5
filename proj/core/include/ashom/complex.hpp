#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ashom/abelian.hpp"

namespace ashom {

/// Cochain complex of finitely generated free abelian groups.
///
/// C^n = Z^{rank(n)} for n in [lo, hi], zero elsewhere; delta(n) is the
/// rank(n+1) x rank(n) matrix of the coboundary C^n -> C^{n+1}.
class IntegerCochainComplex {
 public:
  IntegerCochainComplex() = default;
  /// deltas[i] is the coboundary out of degree lo + i; the coboundary out of
  /// the top degree is zero and may be omitted.
  IntegerCochainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntegerMatrix> deltas);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const noexcept { return ranks_.empty(); }
  std::size_t rank(int n) const;
  /// delta^n : C^n -> C^{n+1}; a zero matrix outside the stored range.
  IntegerMatrix delta(int n) const;

  /// Throws DegreeMismatch on inconsistent shapes and NotAComplex at the
  /// first degree n with delta^{n+1} delta^n != 0.
  void validate() const;

  /// ker delta^n / im delta^{n-1}.
  FGAbelianGroup cohomology(int n) const;

  /// Basis (columns) of the cocycle lattice ker delta^n.
  IntegerMatrix cocycle_basis(int n) const;

  friend bool operator==(const IntegerCochainComplex&, const IntegerCochainComplex&) = default;

 private:
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> deltas_;
};

/// Free function spelling used by callers.
inline void validate_complex(const IntegerCochainComplex& C) { C.validate(); }
inline FGAbelianGroup cohomology(const IntegerCochainComplex& C, int n) { return C.cohomology(n); }

/// Returned by complex constructors that only build the low degrees.
IntegerCochainComplex truncate_above(const IntegerCochainComplex& C, int top);

/// f : C -> C' with components f^n : C^n -> C'^n (matrix rank'(n) x rank(n)).
struct CochainMap {
  const IntegerCochainComplex* source = nullptr;
  const IntegerCochainComplex* target = nullptr;
  std::map<int, IntegerMatrix> components;

  IntegerMatrix component(int n) const;
  /// Throws NotAChainMap when delta' f != f delta somewhere.
  void validate() const;

  static CochainMap identity(const IntegerCochainComplex& C);
  static CochainMap zero(const IntegerCochainComplex& source, const IntegerCochainComplex& target);
};

/// A cochain map that owns its source and target complexes.
struct OwnedCochainMap {
  std::shared_ptr<const IntegerCochainComplex> source;
  std::shared_ptr<const IntegerCochainComplex> target;
  CochainMap map;

  OwnedCochainMap() = default;
  OwnedCochainMap(IntegerCochainComplex s, IntegerCochainComplex t, std::map<int, IntegerMatrix> components);
};

/// g o f as cochain maps (f first).
CochainMap compose(const CochainMap& g, const CochainMap& f);

/// Maps D^n : C^n -> C'^{n-1} (matrix rank'(n-1) x rank(n)).
struct CochainHomotopy {
  std::map<int, IntegerMatrix> components;
  IntegerMatrix component(int n, const IntegerCochainComplex& source, const IntegerCochainComplex& target) const;
};

/// Checks delta' D^n + D^{n+1} delta = f^n - g^n in every degree. Throws
/// NotAHomotopy on the first failure.
void validate_homotopy(const CochainMap& f, const CochainMap& g, const CochainHomotopy& D);

/// Product of all nonzero Smith invariant factors of all coboundaries.
Integer coboundary_invariant_product(const IntegerCochainComplex& C);

}  // namespace ashom
