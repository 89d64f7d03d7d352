#include "sigample/exact/spectral.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "sigample/error.hpp"
#include "sigample/exact/rational_poly.hpp"

namespace sigample {

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<Rational> IntPolynomial::to_rational() const {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.emplace_back(c);
  return out;
}

std::string IntPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial char_poly(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{{Integer(1)}};
  // Berkowitz: coefficients highest degree first for the growing principal minor
  std::vector<Integer> vect{Integer(1), Integer(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // toeplitz column t = [1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C]
    std::vector<Integer> t;
    t.reserve(r + 2);
    t.emplace_back(1);
    t.emplace_back(-m(r, r));
    std::vector<Integer> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t p = 0; p < r; ++p) {
      Integer dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * col[j];
      t.push_back(-dot);
      std::vector<Integer> next(r, Integer(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
      }
      col = std::move(next);
    }
    std::vector<Integer> out(r + 2, Integer(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += t[i - j] * vect[j];
    }
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return IntPolynomial{std::move(vect)};
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t cyclotomic_exponent_bound(std::size_t size) {
  // φ(m) ≥ sqrt(m/2), so φ(m) ≤ ℓ forces m ≤ 2ℓ²
  const std::uint64_t limit = 2 * static_cast<std::uint64_t>(size) * size + 2;
  std::uint64_t bound = 1;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (totient(m) > size) continue;
    const std::uint64_t g = std::gcd(bound, m);
    if (bound / g > std::numeric_limits<std::uint64_t>::max() / m) {
      throw Error(ErrorKind::InvalidArgument,
                  "rank " + std::to_string(size) + " too large for the totient bound");
    }
    bound = bound / g * m;
  }
  return bound;
}

namespace {

void require_unimodular(const IntegerMatrix& m) {
  const Integer det = m.determinant();
  if (abs(det) != 1) {
    throw Error(ErrorKind::NotInvertibleOverIntegers,
                "matrix has determinant " + det.get_str() + ", need ±1");
  }
}

IntegerMatrix pow_unsigned(IntegerMatrix base, std::uint64_t e) {
  IntegerMatrix acc = IntegerMatrix::identity(base.size());
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_unipotent(const IntegerMatrix& m) {
  const IntegerMatrix n = m - IntegerMatrix::identity(m.size());
  return pow_unsigned(n, m.size()).is_zero();
}

QuasiUnipotence quasi_unipotence(const IntegerMatrix& m) {
  require_unimodular(m);
  const std::uint64_t bound = cyclotomic_exponent_bound(m.size());
  if (!is_unipotent(pow_unsigned(m, bound))) return {};
  for (std::uint64_t d : divisors(bound)) {
    if (is_unipotent(pow_unsigned(m, d))) return QuasiUnipotence{d};
  }
  return QuasiUnipotence{bound};
}

std::size_t nilpotency_index(const IntegerMatrix& m) {
  if (!is_unipotent(m)) {
    throw Error(ErrorKind::NotUnipotent, "matrix " + m.to_string() + " is not unipotent");
  }
  const IntegerMatrix n = m - IntegerMatrix::identity(m.size());
  IntegerMatrix power = n;
  std::size_t k = 0;
  while (!power.is_zero()) {
    power = power * n;
    ++k;
  }
  return k;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  require_unimodular(m);
  return m.adjugate() * m.determinant();
}

IntegerMatrix mat_pow(const IntegerMatrix& m, std::int64_t exponent) {
  if (exponent >= 0) return pow_unsigned(m, static_cast<std::uint64_t>(exponent));
  const auto magnitude = static_cast<std::uint64_t>(-(exponent + 1)) + 1;
  return pow_unsigned(unimodular_inverse(m), magnitude);
}

RationalInterval spectral_radius(const IntegerMatrix& m, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (m.size() == 0) return {Rational(0), Rational(0)};
  const IntPolynomial products = char_poly(m.kronecker(m));
  const auto squared = qpoly::squarefree_part(products.to_rational());
  const auto moduli = qpoly::substitute_square(squared);
  auto root = largest_real_root(moduli, eps);
  if (!root) {
    // unreachable for a nonempty matrix: ρ² is always a root
    throw Error(ErrorKind::InvalidArgument, "spectral radius isolation failed");
  }
  if (root->lo < 0) root->lo = 0;
  return *root;
}

}  // namespace sigample
