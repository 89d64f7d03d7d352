#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigample/exact/integer_matrix.hpp"
#include "sigample/exact/real_roots.hpp"

namespace sigample {

/// Integer polynomial, coefficients lowest degree first; no trailing zeros.
struct IntPolynomial {
  std::vector<Integer> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Integer evaluate(const Integer& x) const;
  std::vector<Rational> to_rational() const;
  /// e.g. "x^2-14x+1"; "0" for the zero polynomial.
  std::string to_string() const;
  bool operator==(const IntPolynomial&) const = default;
};

/// det(xI - M), via Berkowitz's division-free recurrence.
IntPolynomial char_poly(const IntegerMatrix& m);

struct QuasiUnipotence {
  /// Minimal q ≥ 1 with M^q unipotent, absent when M is not quasi-unipotent.
  std::optional<std::uint64_t> q;

  bool quasi_unipotent() const { return q.has_value(); }
};

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

/// lcm of every m ≥ 1 with φ(m) ≤ size. Any root of unity that is an
/// eigenvalue of a size×size integer matrix has order dividing this.
std::uint64_t cyclotomic_exponent_bound(std::size_t size);

/// Decides whether all eigenvalues are roots of unity by testing whether
/// (M^{M0} - I)^ℓ vanishes, M0 = cyclotomic_exponent_bound(ℓ).
/// Throws NotInvertibleOverIntegers unless |det M| = 1.
QuasiUnipotence quasi_unipotence(const IntegerMatrix& m);

bool is_unipotent(const IntegerMatrix& m);

/// Least k ≥ 0 with (M - I)^{k+1} = 0; throws NotUnipotent.
std::size_t nilpotency_index(const IntegerMatrix& m);

/// Exact power by squaring. Negative exponents use the adjugate and need
/// |det M| = 1 (NotInvertibleOverIntegers otherwise).
IntegerMatrix mat_pow(const IntegerMatrix& m, std::int64_t exponent);

/// Inverse of a unimodular matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// Interval of width ≤ eps containing ρ(M). The squared moduli of the
/// eigenvalues are among the roots of char_poly(M ⊗ M) (whose roots are all
/// products λ_i λ_j), and ρ² is the largest positive real one; ρ is then the
/// largest real root of that polynomial evaluated at x².
RationalInterval spectral_radius(const IntegerMatrix& m, const Rational& eps);

}  // namespace sigample
