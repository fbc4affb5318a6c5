#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ashom/matrix.hpp"

namespace ashom {

/// Z^rank (+) Z/d_1 (+) ... (+) Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
///
/// The representation is canonical, so two groups are isomorphic exactly when
/// they compare equal. Generators are ordered free first, then torsion.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  /// Builds the canonical form of Z^rank (+) (+)_i Z/orders[i]. Orders may be
  /// arbitrary non-negative integers: 0 contributes a free summand and 1 is
  /// dropped.
  FGAbelianGroup(std::size_t rank, const std::vector<Integer>& orders);

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& order) { return FGAbelianGroup(0, {order}); }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t generator_count() const noexcept { return rank_ + torsion_.size(); }
  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }
  bool is_finite() const noexcept { return rank_ == 0; }

  /// Product of invariant factors (1 for a free group).
  Integer torsion_order() const;
  /// Largest invariant factor (1 for a torsion-free group).
  Integer exponent() const;
  /// Order of the group; nullopt when infinite.
  std::optional<Integer> order() const;
  /// Number of prime-power factors counted with multiplicity, i.e. the
  /// composition length of the torsion subgroup.
  std::size_t torsion_length() const;

  /// Relation matrix on the canonical generators (diagonal, zero for free).
  IntegerMatrix relation_matrix() const;

  FGAbelianGroup operator+(const FGAbelianGroup& other) const;
  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

  /// "Z^2 (+) Z/2 (+) Z/6", "Z", "0".
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^rows / colspan(A).
FGAbelianGroup cokernel(const IntegerMatrix& A);

FGAbelianGroup hom(const FGAbelianGroup& A, const FGAbelianGroup& B);
FGAbelianGroup ext(const FGAbelianGroup& A, const FGAbelianGroup& B);

bool is_isomorphic(const FGAbelianGroup& A, const FGAbelianGroup& B);

/// Parses the descriptor language: "0", "Z", "Z^3", "Z/6", "Z^2+Z/2+Z/4".
/// "(+)" is accepted as a separator too. Throws std::invalid_argument.
FGAbelianGroup parse_group(std::string_view text);

}  // namespace ashom
