#pragma once

#include <vector>

#include "ashom/abelian.hpp"
#include "ashom/presentation.hpp"

namespace ashom {

/// Coordinate type of a structured divisible module.
enum class DivisibleKind {
  Rational,  ///< a copy of Q
  Circle,    ///< a copy of Q/Z
};

/// Bounded-denominator piece of a resolution: every Q coordinate c is
/// restricted to (1/D_c)Z and every Q/Z coordinate to (1/D_c)Z/Z, with
/// D_c = scale_c * N. Elements are written through their numerators.
struct ResolutionStage {
  Integer modulus;            // N
  Presentation prime;         // bounded part of G'
  Presentation double_prime;  // bounded part of G''
  IntegerMatrix alpha;        // G generators -> prime numerators
  IntegerMatrix beta;         // prime numerators -> double_prime numerators
};

/// 0 -> G -alpha-> G' -beta-> G'' -> 0 with G', G'' finite sums of Q and Q/Z.
///
/// Maps between the divisible modules are rational-linear: a Q -> Q/Z entry q
/// means x |-> q x mod 1, a Q/Z -> Q/Z entry must be an integer, and Q/Z -> Q
/// entries must vanish. Scales are chosen so that every stage is again a short
/// exact sequence 0 -> G -> G'_N -> G''_N -> 0.
struct InjectiveResolution {
  FGAbelianGroup base;
  std::vector<DivisibleKind> prime_kinds;
  std::vector<DivisibleKind> double_prime_kinds;
  RationalMatrix alpha;  // prime_size x base.generator_count()
  RationalMatrix beta;   // double_prime_size x prime_size
  std::vector<Integer> prime_scale;
  std::vector<Integer> double_prime_scale;

  std::size_t prime_size() const { return prime_kinds.size(); }
  std::size_t double_prime_size() const { return double_prime_kinds.size(); }

  /// Structural checks: shapes, entry rules, beta * alpha = 0 in G'', and
  /// integrality of every stage matrix. Throws ResolutionMismatch.
  void validate() const;

  ResolutionStage stage(const Integer& N) const;

  /// "Q (+) Q/Z" style description of G' and G''.
  std::string describe_prime() const;
  std::string describe_double_prime() const;
};

/// The canonical divisible resolution: Z contributes Q -> Q/Z (mod 1), Z/d
/// contributes Q/Z -> Q/Z (times d) with Z/d = (1/d)Z/Z.
InjectiveResolution resolve_injective(const FGAbelianGroup& G);

/// Same resolution with the summands of G' and G'' listed in reverse order.
InjectiveResolution reorder_resolution(const InjectiveResolution& R);
/// R (+) (Q -id-> Q) (+) (Q/Z -id-> Q/Z).
InjectiveResolution pad_resolution(const InjectiveResolution& R);

/// Exactness of a single stage, checked by explicit lattice computations.
struct StageExactness {
  bool alpha_injective = false;
  bool beta_surjective = false;
  bool image_equals_kernel = false;
  FGAbelianGroup kernel;  // canonical form of ker(beta_N)
  bool ok() const { return alpha_injective && beta_surjective && image_equals_kernel; }
};

StageExactness check_stage(const InjectiveResolution& R, const Integer& N);

}  // namespace ashom
