#include "sigample/numpoly/numerical_polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sigample/error.hpp"
#include "sigample/exact/rational_poly.hpp"
#include "sigample/exact/real_roots.hpp"

namespace sigample {

NumericalPolynomial::NumericalPolynomial(std::vector<Rational> monomial)
    : coeffs_(std::move(monomial)) {
  trim();
}

NumericalPolynomial::NumericalPolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

void NumericalPolynomial::trim() { qpoly::trim(coeffs_); }

NumericalPolynomial NumericalPolynomial::variable() {
  return NumericalPolynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

NumericalPolynomial NumericalPolynomial::binomial(std::size_t i) {
  NumericalPolynomial p(Rational(1));
  for (std::size_t j = 0; j < i; ++j) {
    // multiply by (m - j)/(j + 1)
    p *= NumericalPolynomial(std::vector<Rational>{Rational(-static_cast<long>(j)), Rational(1)});
    p *= Rational(1, static_cast<unsigned long>(j + 1));
  }
  return p;
}

NumericalPolynomial NumericalPolynomial::from_binomial(std::span<const Rational> coeffs) {
  NumericalPolynomial out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out += binomial(i) * coeffs[i];
  }
  return out;
}

std::vector<Rational> NumericalPolynomial::binomial_coefficients() const {
  if (coeffs_.empty()) return {};
  const std::size_t n = coeffs_.size();
  std::vector<Rational> table;
  table.reserve(n);
  for (std::size_t m = 0; m < n; ++m) table.push_back((*this)(static_cast<long>(m)));
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(table[0]);
    for (std::size_t j = 0; j + 1 < table.size(); ++j) table[j] = table[j + 1] - table[j];
    table.pop_back();
  }
  return out;
}

std::optional<std::size_t> NumericalPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational NumericalPolynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational NumericalPolynomial::operator()(const Rational& m) const {
  return qpoly::evaluate(coeffs_, m);
}

bool NumericalPolynomial::is_integer_valued() const {
  const auto b = binomial_coefficients();
  return std::all_of(b.begin(), b.end(), [](const Rational& c) { return is_integral(c); });
}

NumericalPolynomial NumericalPolynomial::operator-() const {
  NumericalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

NumericalPolynomial& NumericalPolynomial::operator+=(const NumericalPolynomial& other) {
  coeffs_ = qpoly::add(coeffs_, other.coeffs_);
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator-=(const NumericalPolynomial& other) {
  coeffs_ = qpoly::sub(coeffs_, other.coeffs_);
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator*=(const NumericalPolynomial& other) {
  coeffs_ = qpoly::mul(coeffs_, other.coeffs_);
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator*=(const Rational& factor) {
  coeffs_ = qpoly::scale(coeffs_, factor);
  return *this;
}

std::string NumericalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (i == 0) {
      os << sigample::to_string(mag);
    } else {
      if (mag != 1) os << sigample::to_string(mag) << '*';
      os << 'm';
      if (i >= 2) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

DegreeLeading degree_leading(const NumericalPolynomial& p) {
  return DegreeLeading{p.degree(), p.leading()};
}

Integer integer_cauchy_bound(const NumericalPolynomial& p) {
  return ceil(cauchy_bound(p.monomial()));
}

namespace {

/// floor(r) for every real root r of p, read off isolation intervals of width
/// below one: for a root in (lo, hi], floor(r) ∈ {floor(lo), floor(hi)}.
std::set<Integer> root_floors(const NumericalPolynomial& p) {
  std::set<Integer> out;
  if (!p.degree() || *p.degree() == 0) return out;
  for (const auto& iv : isolate_real_roots(p.monomial(), Rational(1, 2))) {
    out.insert(floor(iv.lo));
    out.insert(floor(iv.hi));
  }
  return out;
}

}  // namespace

std::optional<Integer> positivity_threshold(const NumericalPolynomial& p) {
  if (p.leading() <= 0) return std::nullopt;
  // the largest integer m ≥ 1 with p(m) ≤ 0 is floor of some real root
  Integer last_bad = 0;
  for (const auto& c : root_floors(p)) {
    if (c >= 1 && c > last_bad && p(Rational(c)) <= 0) last_bad = c;
  }
  return last_bad + 1;
}

std::optional<Integer> exists_common_positive(std::span<const NumericalPolynomial> ps) {
  if (ps.empty()) {
    throw Error(ErrorKind::InvalidArgument, "exists_common_positive needs a nonempty list");
  }
  // a minimal witness m > 1 has some p(m-1) ≤ 0 < p(m), so a root of that p
  // lies in [m-1, m): every candidate is 1 or floor(root) + 1
  std::set<Integer> candidates{Integer(1)};
  for (const auto& p : ps) {
    for (const auto& f : root_floors(p)) {
      if (f + 1 >= 1) candidates.insert(f + 1);
    }
  }
  for (const auto& m : candidates) {
    const Rational x(m);
    const bool all_positive =
        std::all_of(ps.begin(), ps.end(), [&](const NumericalPolynomial& p) { return p(x) > 0; });
    if (all_positive) return m;
  }
  return std::nullopt;
}

}  // namespace sigample
