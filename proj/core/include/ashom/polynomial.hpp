#pragma once

#include <vector>

#include "ashom/matrix.hpp"

namespace ashom {

/// Coefficients from the constant term up; no trailing zeros.
using Polynomial = std::vector<Rational>;

Polynomial trim(Polynomial p);
int degree(const Polynomial& p);  // -1 for the zero polynomial
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);
/// Quotient and remainder of a by b (b nonzero).
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial squarefree_part(const Polynomial& p);

/// det(x I - A), monic.
Polynomial characteristic_polynomial(const IntegerMatrix& A);

/// For a monic integer polynomial, the product of its distinct irreducible
/// factors over Z whose constant term is +-1, i.e. the factors whose roots are
/// algebraic units. Returns 1 when there are none.
Polynomial unit_part(const Polynomial& p);

/// h(A) for an integer polynomial h.
IntegerMatrix evaluate(const Polynomial& h, const IntegerMatrix& A);

}  // namespace ashom
