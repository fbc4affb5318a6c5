#pragma once

#include <vector>

#include "ashom/complex.hpp"
#include "ashom/presentation.hpp"
#include "ashom/resolution.hpp"

namespace ashom {

/// Element of a finite sum of copies of Q and Q/Z, stored coordinate-wise.
/// Q/Z coordinates are kept as reduced fractions in [0, 1).
struct MixedModuleElement {
  std::vector<DivisibleKind> kinds;
  RationalVector values;

  void normalize();
  bool is_zero() const;
  friend bool operator==(const MixedModuleElement&, const MixedModuleElement&) = default;
};

/// Element (phi', phi'') of C_n = Hom(C^n; G') (+) Hom(C^{n+1}; G'').
///
/// phi' is stored component-major: value of component c on basis element b
/// of C^n sits at index c * rank(n) + b; phi'' likewise with rank(n+1).
struct ConeElement {
  MixedModuleElement prime;
  MixedModuleElement double_prime;
  friend bool operator==(const ConeElement&, const ConeElement&) = default;
};

/// Chain complex C_n = Hom(C^n; G') (+) Hom(C^{n+1}; G'') with boundary
/// d(phi', phi'') = (phi' o delta^{n-1}, beta o phi' - phi'' o delta^n).
class ConeComplex {
 public:
  ConeComplex(IntegerCochainComplex base, InjectiveResolution resolution);

  const IntegerCochainComplex& base() const noexcept { return base_; }
  const InjectiveResolution& resolution() const noexcept { return resolution_; }

  /// Lowest and highest degree with a nonzero chain module.
  int lo() const noexcept { return base_.lo() - 1; }
  int hi() const noexcept { return base_.hi(); }

  std::size_t prime_size(int n) const { return resolution_.prime_size() * base_.rank(n); }
  std::size_t double_prime_size(int n) const { return resolution_.double_prime_size() * base_.rank(n + 1); }

  ConeElement zero(int n) const;
  /// Builds an element from raw coordinate vectors and reduces Q/Z entries.
  ConeElement element(int n, RationalVector prime, RationalVector double_prime) const;

  /// Validates base and resolution.
  void validate() const;

  /// The bounded-denominator subcomplex at modulus N, written on numerators.
  PresentedChainComplex stage(const Integer& N) const;

  /// Numerator vector of x in the stage at modulus N (throws NoSolution if x
  /// has a denominator not admitted by that stage).
  IntegerVector stage_coordinates(const ConeElement& x, const Integer& N) const;
  ConeElement from_stage(int n, const IntegerVector& v, const Integer& N) const;

 private:
  IntegerCochainComplex base_;
  InjectiveResolution resolution_;
};

ConeComplex dualize(const IntegerCochainComplex& C, const InjectiveResolution& R);

/// Exact evaluation of the cone boundary on x in degree n.
ConeElement cone_boundary_apply(const ConeComplex& K, int n, const ConeElement& x);

struct SaturationOptions {
  Integer modulus_cap = boost::multiprecision::pow(Integer(10), 100);
  /// Multiplies the starting modulus; used to re-run with a larger modulus.
  Integer base_multiplier = 1;
};

/// Starting modulus of the saturation protocol for K.
Integer base_modulus(const ConeComplex& K, const SaturationOptions& options = {});

struct ConeHomologyResult {
  int degree = 0;
  FGAbelianGroup group;
  std::vector<Integer> moduli;  // N0, N0^2, N0^3
};

/// H_n of the cone, computed on three successive stages N0, N0^2, N0^3 and
/// accepted when the canonical forms agree. Throws SaturationFailure.
ConeHomologyResult cone_homology_report(const ConeComplex& K, int n, const SaturationOptions& options = {});
inline FGAbelianGroup cone_homology(const ConeComplex& K, int n, const SaturationOptions& options = {}) {
  return cone_homology_report(K, n, options).group;
}

/// Chain map cone(target of f) -> cone(source of f) at the stage modulus N:
/// (phi', phi'') |-> (phi' o f^n, phi'' o f^{n+1}).
struct ConeChainMap {
  const ConeComplex* source = nullptr;  // cone of f.target
  const ConeComplex* target = nullptr;  // cone of f.source
  std::map<int, IntegerMatrix> components;  // stage matrices, independent of N
  ConeElement apply(int n, const ConeElement& x) const;
};

/// Requires that both cones share the resolution. Throws ResolutionMismatch.
ConeChainMap induced_cone_map(const CochainMap& f, const ConeComplex& source_cone, const ConeComplex& target_cone);

/// Maps Dbar_n : cone(C')_n -> cone(C)_{n+1},
/// (phi', phi'') |-> (phi' o D^{n+1}, -phi'' o D^{n+2}).
struct ConeHomotopy {
  std::map<int, IntegerMatrix> components;
};

/// Lifts D (validated against f, g first) and verifies
/// d Dbar + Dbar d' = f_# - g_# exactly. Throws NotAHomotopy.
ConeHomotopy homotopy_lift(const CochainMap& f, const CochainMap& g, const CochainHomotopy& D,
                           const ConeComplex& source_cone, const ConeComplex& target_cone);

/// The chain-homotopy identity for an already lifted homotopy.
bool check_cone_homotopy(const ConeChainMap& f, const ConeChainMap& g, const ConeHomotopy& D);

/// Integer stage matrix of the boundary out of degree n (independent of N).
IntegerMatrix cone_stage_boundary(const ConeComplex& K, int n);

/// Stage chain map in the form expected by the generic homology code.
PresentedChainMap as_presented(const ConeChainMap& f, const PresentedChainComplex& source_stage,
                               const PresentedChainComplex& target_stage);

}  // namespace ashom
