#include "sigample/exact/scalar.hpp"

#include <cctype>

#include "sigample/error.hpp"

namespace sigample {

namespace {

bool is_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer decimal(std::string_view text) {
  if (!is_decimal(text)) {
    throw Error(ErrorKind::ParseError,
                "not a decimal integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Integer parse_integer(std::string_view text) { return decimal(text); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(decimal(text));
  const Integer num = decimal(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorKind::ParseError,
                "denominator must be unsigned: '" + std::string(text) + "'");
  }
  const Integer den = decimal(den_text);
  if (den == 0) {
    throw Error(ErrorKind::ParseError,
                "zero denominator: '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

}  // namespace sigample
