#include "ashom/polynomial.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include "ashom/errors.hpp"

namespace ashom {
namespace {

using Complex = boost::multiprecision::cpp_complex_50;
using Real = boost::multiprecision::cpp_bin_float_50;

bool is_integral(const Polynomial& p) {
  for (const auto& c : p)
    if (denominator(c) != 1) return false;
  return true;
}

// Aberth iteration on a monic polynomial with simple roots.
std::vector<Complex> roots(const Polynomial& p) {
  const int n = degree(p);
  std::vector<Complex> coeff(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) coeff[static_cast<std::size_t>(i)] = Complex(Real(p[static_cast<std::size_t>(i)]));
  Real bound = 1;
  for (int i = 0; i < n; ++i) bound = std::max(bound, Real(1) + abs(coeff[static_cast<std::size_t>(i)]));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Real angle = Real(2) * boost::math::constants::pi<Real>() * (Real(k) + Real(0.25)) / Real(n);
    z[static_cast<std::size_t>(k)] = Complex(bound * cos(angle), bound * sin(angle)) * Real(0.9);
  }
  auto eval = [&](const Complex& x, Complex& value, Complex& slope) {
    value = coeff[static_cast<std::size_t>(n)];
    slope = Complex(0);
    for (int i = n - 1; i >= 0; --i) {
      slope = slope * x + value;
      value = value * x + coeff[static_cast<std::size_t>(i)];
    }
  };
  const Real tol("1e-45");
  for (int iter = 0; iter < 500; ++iter) {
    Real moved = 0;
    for (int k = 0; k < n; ++k) {
      Complex v, s;
      eval(z[static_cast<std::size_t>(k)], v, s);
      if (abs(v) == 0) continue;
      Complex ratio = v / s;
      Complex sum(0);
      for (int j = 0; j < n; ++j)
        if (j != k) sum += Complex(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      Complex step = ratio / (Complex(1) - ratio * sum);
      z[static_cast<std::size_t>(k)] -= step;
      moved = std::max(moved, Real(abs(step)));
    }
    if (moved < tol) break;
  }
  return z;
}

}  // namespace

Polynomial trim(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const Polynomial& p) { return static_cast<int>(trim(p).size()) - 1; }

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

Polynomial derivative(const Polynomial& p) {
  Polynomial out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  return trim(out);
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  Polynomial r = trim(a), d = trim(b);
  if (d.empty()) throw ShapeMismatch("polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  Polynomial q(r.size() - d.size() + 1);
  while (!r.empty() && r.size() >= d.size()) {
    std::size_t shift = r.size() - d.size();
    Rational c = r.back() / d.back();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r.pop_back();
    r = trim(r);
  }
  return {trim(q), r};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Polynomial r = divide(a, b).second;
    a = b;
    b = r;
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial g = gcd(p, derivative(p));
  Polynomial q = divide(p, g).first;
  Rational lead = q.back();
  for (auto& c : q) c /= lead;
  return q;
}

Polynomial characteristic_polynomial(const IntegerMatrix& A) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = A.rows();
  if (A.cols() != n) throw ShapeMismatch("characteristic polynomial of a non-square matrix");
  RationalMatrix a = to_rational(A);
  Polynomial c(n + 1);
  c[n] = 1;
  RationalMatrix M(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * M;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    M = next;
    RationalMatrix AM = a * M;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

Polynomial unit_part(const Polynomial& p) {
  Polynomial q = squarefree_part(p);
  if (!is_integral(q)) throw ShapeMismatch("unit_part expects a monic integer polynomial");
  const int n = degree(q);
  if (n <= 0) return {1};
  std::vector<Complex> z = roots(q);
  const Real tol("1e-20");
  // Largest subset of roots whose product polynomial is an integer divisor of
  // q with constant term +-1. Such a divisor contains every unit factor.
  for (int size = n; size >= 1; --size) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<Complex> f{Complex(1)};
      for (int k = 0; k < n; ++k) {
        if (!pick[static_cast<std::size_t>(k)]) continue;
        std::vector<Complex> g(f.size() + 1, Complex(0));
        for (std::size_t i = 0; i < f.size(); ++i) {
          g[i + 1] += f[i];
          g[i] -= f[i] * z[static_cast<std::size_t>(k)];
        }
        f = g;
      }
      Polynomial h;
      bool ok = true;
      for (const auto& c : f) {
        Real re = round(c.real());
        if (abs(c.real() - re) > tol || abs(c.imag()) > tol) {
          ok = false;
          break;
        }
        h.emplace_back(Integer(re));
      }
      if (ok && abs(h.front()) == 1 && divide(q, h).second.empty()) return h;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {1};
}

IntegerMatrix evaluate(const Polynomial& h, const IntegerMatrix& A) {
  const std::size_t n = A.rows();
  IntegerMatrix out(n, n);
  for (std::size_t i = h.size(); i-- > 0;) {
    if (denominator(h[i]) != 1) throw ShapeMismatch("evaluate expects integer coefficients");
    out = A * out;
    for (std::size_t k = 0; k < n; ++k) out(k, k) += numerator(h[i]);
  }
  return out;
}

}  // namespace ashom
