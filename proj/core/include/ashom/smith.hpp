#pragma once

#include <optional>
#include <vector>

#include "ashom/matrix.hpp"

namespace ashom {

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... .
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  /// Inverse of U; kept because column spans are read off from it.
  IntegerMatrix U_inverse;
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 .. d_rank.
  std::vector<Integer> diagonal() const;
};

/// Full decomposition. Pivots are the smallest nonzero |entry|, ties broken
/// row-major. Output is deterministic for a fixed input.
SmithDecomposition smith_normal_form(const IntegerMatrix& A);

/// The nonzero diagonal of the Smith form only (no transforms tracked).
std::vector<Integer> smith_diagonal(const IntegerMatrix& A);

/// Columns form a Z-basis of {x : A x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& A);

/// Columns form a Z-basis of the column span of A.
IntegerMatrix image_basis(const IntegerMatrix& A);

std::size_t matrix_rank(const IntegerMatrix& A);

/// Reusable solver for A x = b over the integers.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntegerMatrix& A);

  /// Some integer solution, or nullopt when b is not in the column span.
  std::optional<IntegerVector> solve(const IntegerVector& b) const;
  /// Same as solve() but throws NoSolution.
  IntegerVector solve_or_throw(const IntegerVector& b) const;
  bool in_span(const IntegerVector& b) const { return solve(b).has_value(); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SmithDecomposition& decomposition() const { return snf_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  SmithDecomposition snf_;
};

/// Coordinates of every column of `vectors` in the basis `basis` (full column
/// rank). Throws NoSolution if some column is outside the lattice.
IntegerMatrix coordinates_in_basis(const IntegerMatrix& basis, const IntegerMatrix& vectors);

}  // namespace ashom
