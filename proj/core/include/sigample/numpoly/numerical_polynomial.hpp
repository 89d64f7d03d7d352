#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigample/exact/scalar.hpp"

namespace sigample {

/// Polynomial in one variable m with exact rational coefficients, stored in
/// the monomial basis (lowest degree first, no trailing zeros). The
/// binomial basis C(m, i) is available as a constructor and a printer.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  explicit NumericalPolynomial(std::vector<Rational> monomial);
  NumericalPolynomial(const Rational& constant);  // NOLINT(implicit)

  static NumericalPolynomial variable();
  /// m ↦ C(m, i) = m(m-1)…(m-i+1)/i!
  static NumericalPolynomial binomial(std::size_t i);
  /// Σ c_i C(m, i).
  static NumericalPolynomial from_binomial(std::span<const Rational> coeffs);

  const std::vector<Rational>& monomial() const noexcept { return coeffs_; }
  /// Coefficients c_i with p(m) = Σ c_i C(m, i), i.e. the forward
  /// differences Δ^i p(0).
  std::vector<Rational> binomial_coefficients() const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Absent for the zero polynomial (degree −∞).
  std::optional<std::size_t> degree() const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& m) const;
  Rational operator()(long m) const { return (*this)(Rational(m)); }

  /// True when every binomial-basis coefficient is an integer.
  bool is_integer_valued() const;

  NumericalPolynomial operator-() const;
  NumericalPolynomial& operator+=(const NumericalPolynomial& other);
  NumericalPolynomial& operator-=(const NumericalPolynomial& other);
  NumericalPolynomial& operator*=(const NumericalPolynomial& other);
  NumericalPolynomial& operator*=(const Rational& factor);

  friend NumericalPolynomial operator+(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a += b;
  }
  friend NumericalPolynomial operator-(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a -= b;
  }
  friend NumericalPolynomial operator*(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a *= b;
  }
  friend NumericalPolynomial operator*(NumericalPolynomial a, const Rational& b) {
    return a *= b;
  }
  friend NumericalPolynomial operator*(const Rational& a, NumericalPolynomial b) {
    return b *= a;
  }

  bool operator==(const NumericalPolynomial&) const = default;

  /// e.g. "2/3*m^4-m^2+1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DegreeLeading {
  std::optional<std::size_t> degree;  // nullopt = −∞
  Rational leading;                   // meaningless (0) for the zero polynomial
};

DegreeLeading degree_leading(const NumericalPolynomial& p);

/// ⌈1 + max|a_i|/|a_n|⌉; every real root lies strictly below it in modulus.
Integer integer_cauchy_bound(const NumericalPolynomial& p);

/// Least m0 ≥ 1 with p(m) > 0 for all integers m ≥ m0, or nullopt when the
/// leading coefficient is not positive (p is never eventually positive).
std::optional<Integer> positivity_threshold(const NumericalPolynomial& p);

/// Minimal m ≥ 1 with p(m) > 0 for every p, or nullopt when none exists.
/// Throws InvalidArgument on an empty list.
std::optional<Integer> exists_common_positive(std::span<const NumericalPolynomial> ps);

}  // namespace sigample
