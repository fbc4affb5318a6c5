#include "ashom/smith.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace ashom {
namespace {

struct Overflow {};

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// 128-bit integer that refuses to wrap. The Smith reduction first runs on
// this and restarts with cpp_int when an intermediate value gets too large.
class Checked {
 public:
  Checked() = default;
  Checked(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static Checked raw(Int128 v) {
    Checked c;
    c.v_ = v;
    return c;
  }
  Int128 value() const { return v_; }

  friend Checked operator+(Checked a, Checked b) {
    Int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return raw(r);
  }
  friend Checked operator-(Checked a, Checked b) {
    Int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return raw(r);
  }
  friend Checked operator*(Checked a, Checked b) {
    Int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return raw(r);
  }
  friend Checked operator/(Checked a, Checked b) { return raw(a.v_ / b.v_); }
  friend Checked operator%(Checked a, Checked b) { return raw(a.v_ % b.v_); }
  Checked operator-() const {
    if (v_ == kMin) throw Overflow{};
    return raw(-v_);
  }
  Checked& operator+=(Checked b) { return *this = *this + b; }
  Checked& operator-=(Checked b) { return *this = *this - b; }
  friend bool operator==(Checked a, Checked b) { return a.v_ == b.v_; }
  friend bool operator!=(Checked a, Checked b) { return a.v_ != b.v_; }
  friend bool operator<(Checked a, Checked b) { return a.v_ < b.v_; }
  friend bool operator>(Checked a, Checked b) { return a.v_ > b.v_; }

 private:
  static constexpr Int128 kMin = static_cast<Int128>(static_cast<UInt128>(1) << 127);
  Int128 v_ = 0;
};

Checked abs_of(const Checked& x) { return x < Checked(0) ? -x : x; }
Integer abs_of(const Integer& x) { return boost::multiprecision::abs(x); }

template <typename T>
struct Work {
  std::size_t m, n;
  std::vector<T> a;
  bool track_u, track_uinv, track_v;
  std::vector<T> u, uinv, v;  // m x m, m x m, n x n (row-major)

  T& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  // row_i <- row_i + q * row_k
  void add_row(std::size_t i, std::size_t k, const T& q) {
    for (std::size_t j = 0; j < n; ++j)
      if (a[k * n + j] != T(0)) a[i * n + j] += q * a[k * n + j];
    if (track_u)
      for (std::size_t j = 0; j < m; ++j)
        if (u[k * m + j] != T(0)) u[i * m + j] += q * u[k * m + j];
    // Uinv <- Uinv * E^{-1}: col_k <- col_k - q * col_i
    if (track_uinv)
      for (std::size_t r = 0; r < m; ++r)
        if (uinv[r * m + i] != T(0)) uinv[r * m + k] -= q * uinv[r * m + i];
  }
  // col_j <- col_j + q * col_k
  void add_col(std::size_t j, std::size_t k, const T& q) {
    for (std::size_t i = 0; i < m; ++i)
      if (a[i * n + k] != T(0)) a[i * n + j] += q * a[i * n + k];
    if (track_v)
      for (std::size_t i = 0; i < n; ++i)
        if (v[i * n + k] != T(0)) v[i * n + j] += q * v[i * n + k];
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[i * n + j], a[k * n + j]);
    if (track_u)
      for (std::size_t j = 0; j < m; ++j) std::swap(u[i * m + j], u[k * m + j]);
    if (track_uinv)
      for (std::size_t r = 0; r < m; ++r) std::swap(uinv[r * m + i], uinv[r * m + k]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i * n + j], a[i * n + k]);
    if (track_v)
      for (std::size_t i = 0; i < n; ++i) std::swap(v[i * n + j], v[i * n + k]);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = -a[i * n + j];
    if (track_u)
      for (std::size_t j = 0; j < m; ++j) u[i * m + j] = -u[i * m + j];
    if (track_uinv)
      for (std::size_t r = 0; r < m; ++r) uinv[r * m + i] = -uinv[r * m + i];
  }

  // Smallest |entry| in the trailing block starting at t, row-major ties.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    T best{};
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const T& x = a[i * n + j];
        if (x == T(0)) continue;
        T ax = abs_of(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  std::size_t run() {
    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool dirty = false;
        // Clear column t below the pivot.
        for (std::size_t i = t + 1; i < m; ++i) {
          if (at(i, t) == T(0)) continue;
          T q = at(i, t) / at(t, t);
          add_row(i, t, -q);
          if (at(i, t) != T(0)) dirty = true;
        }
        // Clear row t right of the pivot.
        for (std::size_t j = t + 1; j < n; ++j) {
          if (at(t, j) == T(0)) continue;
          T q = at(t, j) / at(t, t);
          add_col(j, t, -q);
          if (at(t, j) != T(0)) dirty = true;
        }
        if (dirty) {
          // Bring the smallest leftover in row/column t to the pivot.
          std::size_t bi = t, bj = t;
          T best = abs_of(at(t, t));
          for (std::size_t i = t + 1; i < m; ++i)
            if (at(i, t) != T(0) && abs_of(at(i, t)) < best) {
              best = abs_of(at(i, t));
              bi = i;
              bj = t;
            }
          for (std::size_t j = t + 1; j < n; ++j)
            if (at(t, j) != T(0) && abs_of(at(t, j)) < best) {
              best = abs_of(at(t, j));
              bi = t;
              bj = j;
            }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        // Enforce divisibility of the remaining block.
        bool fixed = true;
        for (std::size_t i = t + 1; i < m && fixed; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (at(i, j) % at(t, t) != T(0)) {
              add_row(t, i, T(1));
              fixed = false;
              break;
            }
        if (fixed) break;
      }
      if (at(t, t) < T(0)) negate_row(t);
    }
    return t;
  }
};

template <typename T>
T convert(const Integer& x);
template <>
Integer convert<Integer>(const Integer& x) {
  return x;
}
template <>
Checked convert<Checked>(const Integer& x) {
  return Checked(x.convert_to<long long>());
}

Integer back(const Integer& x) { return x; }
Integer back(const Checked& x) {
  Int128 v = x.value();
  bool neg = v < 0;
  UInt128 mag = neg ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
  Integer r = static_cast<unsigned long long>(mag >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(mag & 0xFFFFFFFFFFFFFFFFull);
  return neg ? Integer(-r) : r;
}

IntegerMatrix to_matrix_back(std::size_t r, std::size_t c, const auto& data) {
  IntegerMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = back(data[i * c + j]);
  return out;
}

template <typename T>
SmithDecomposition run_smith(const IntegerMatrix& A, bool tu, bool tuinv, bool tv) {
  Work<T> w;
  w.m = A.rows();
  w.n = A.cols();
  w.a.resize(w.m * w.n);
  for (std::size_t i = 0; i < w.m * w.n; ++i) w.a[i] = convert<T>(A.data()[i]);
  w.track_u = tu;
  w.track_uinv = tuinv;
  w.track_v = tv;
  auto ident = [](std::size_t k) {
    std::vector<T> id(k * k);
    for (std::size_t i = 0; i < k; ++i) id[i * k + i] = T(1);
    return id;
  };
  if (tu) w.u = ident(w.m);
  if (tuinv) w.uinv = ident(w.m);
  if (tv) w.v = ident(w.n);
  SmithDecomposition d;
  d.rank = w.run();
  d.S = to_matrix_back(w.m, w.n, w.a);
  if (tu) d.U = to_matrix_back(w.m, w.m, w.u);
  if (tuinv) d.U_inverse = to_matrix_back(w.m, w.m, w.uinv);
  if (tv) d.V = to_matrix_back(w.n, w.n, w.v);
  return d;
}

bool fits_fast(const IntegerMatrix& A) {
  static const Integer bound = Integer(1) << 62;
  for (const auto& x : A.data())
    if (boost::multiprecision::abs(x) >= bound) return false;
  return true;
}

SmithDecomposition smith_impl(const IntegerMatrix& A, bool tu, bool tuinv, bool tv) {
  if (fits_fast(A)) {
    try {
      return run_smith<Checked>(A, tu, tuinv, tv);
    } catch (const Overflow&) {
      // fall through to the arbitrary-precision path
    }
  }
  return run_smith<Integer>(A, tu, tuinv, tv);
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& A) { return smith_impl(A, true, true, true); }

std::vector<Integer> smith_diagonal(const IntegerMatrix& A) { return smith_impl(A, false, false, false).diagonal(); }

std::size_t matrix_rank(const IntegerMatrix& A) { return smith_impl(A, false, false, false).rank; }

IntegerMatrix kernel_basis(const IntegerMatrix& A) {
  SmithDecomposition d = smith_impl(A, false, false, true);
  std::vector<std::size_t> cols;
  for (std::size_t j = d.rank; j < A.cols(); ++j) cols.push_back(j);
  return d.V.select_columns(cols);
}

IntegerMatrix image_basis(const IntegerMatrix& A) {
  // Column Hermite form: pivots positive, entries left of a pivot reduced
  // into [0, pivot). Keeps entries small when bases are fed back in.
  std::vector<std::vector<Integer>> cols;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    std::vector<Integer> v = A.column(c);
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) cols.push_back(std::move(v));
  }
  auto axpy = [](std::vector<Integer>& y, const Integer& q, const std::vector<Integer>& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
      if (x[i] != 0) y[i] -= q * x[i];
  };
  std::size_t k = 0;
  for (std::size_t row = 0; row < A.rows() && k < cols.size(); ++row) {
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t c = k; c < cols.size(); ++c)
        if (cols[c][row] != 0 && (best == cols.size() || abs(cols[c][row]) < abs(cols[best][row]))) best = c;
      if (best == cols.size()) break;
      std::swap(cols[k], cols[best]);
      bool done = true;
      for (std::size_t c = k + 1; c < cols.size(); ++c) {
        if (cols[c][row] == 0) continue;
        Integer q = cols[c][row] / cols[k][row];
        axpy(cols[c], q, cols[k]);
        if (cols[c][row] != 0) done = false;
      }
      if (done) break;
    }
    if (k == cols.size() || cols[k][row] == 0) continue;
    if (cols[k][row] < 0)
      for (auto& x : cols[k]) x = -x;
    const Integer& p = cols[k][row];
    for (std::size_t c = 0; c < k; ++c) {
      Integer q = cols[c][row] / p;
      if (cols[c][row] - q * p < 0) q -= 1;
      if (q != 0) axpy(cols[c], q, cols[k]);
    }
    ++k;
    // Drop columns that became zero.
    cols.erase(std::remove_if(cols.begin() + static_cast<long>(k), cols.end(),
                              [](const std::vector<Integer>& v) {
                                return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
                              }),
               cols.end());
  }
  IntegerMatrix b(A.rows(), k);
  for (std::size_t c = 0; c < k; ++c) b.set_column(c, cols[c]);
  return b;
}

IntegerSolver::IntegerSolver(const IntegerMatrix& A)
    : rows_(A.rows()), cols_(A.cols()), snf_(smith_impl(A, true, false, true)) {}

std::optional<IntegerVector> IntegerSolver::solve(const IntegerVector& b) const {
  if (b.size() != rows_) throw ShapeMismatch("solver: right-hand side has wrong length");
  IntegerVector ub = snf_.U * b;
  IntegerVector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const Integer& d = snf_.S(i, i);
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * y;
}

IntegerVector IntegerSolver::solve_or_throw(const IntegerVector& b) const {
  auto x = solve(b);
  if (!x) throw NoSolution("integer system has no solution");
  return *x;
}

IntegerMatrix coordinates_in_basis(const IntegerMatrix& basis, const IntegerMatrix& vectors) {
  if (basis.rows() != vectors.rows()) throw ShapeMismatch("coordinates_in_basis: ambient dimension mismatch");
  IntegerMatrix out(basis.cols(), vectors.cols());
  if (vectors.cols() == 0 || basis.cols() == 0) {
    if (basis.cols() == 0 && !vectors.is_zero()) throw NoSolution("vector outside the zero lattice");
    return out;
  }
  IntegerSolver solver(basis);
  for (std::size_t j = 0; j < vectors.cols(); ++j) out.set_column(j, solver.solve_or_throw(vectors.column(j)));
  return out;
}

}  // namespace ashom
