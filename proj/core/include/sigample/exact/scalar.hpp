#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sigample {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with optional sign; throws Error(InvalidArgument).
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace sigample
