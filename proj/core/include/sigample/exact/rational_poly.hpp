#pragma once

#include <utility>
#include <vector>

#include "sigample/exact/scalar.hpp"

/// Dense univariate polynomials over Q as coefficient vectors, lowest degree
/// first. The zero polynomial is the empty vector after trim().
namespace sigample::qpoly {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& p);
Coeffs trimmed(Coeffs p);

/// -1 for the zero polynomial.
int degree(const Coeffs& p);

Rational evaluate(const Coeffs& p, const Rational& x);
Coeffs derivative(const Coeffs& p);
Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs sub(const Coeffs& a, const Coeffs& b);
Coeffs mul(const Coeffs& a, const Coeffs& b);
Coeffs scale(const Coeffs& a, const Rational& factor);

/// Euclidean division; throws InvalidArgument on a zero divisor.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& num, const Coeffs& den);

/// Monic gcd (zero if both inputs are zero).
Coeffs gcd(Coeffs a, Coeffs b);

/// p / gcd(p, p'), same roots without multiplicity.
Coeffs squarefree_part(const Coeffs& p);

/// p(x) ↦ p(x²).
Coeffs substitute_square(const Coeffs& p);

}  // namespace sigample::qpoly
