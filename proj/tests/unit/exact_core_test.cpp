#include "doctest.h"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace sigample;
using namespace sigample::testing;

namespace {

IntegerMatrix s1() { return IntegerMatrix{{1, 4}, {0, -1}}; }
IntegerMatrix s2() { return IntegerMatrix{{-1, 0}, {4, 1}}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("scalars parse and print") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_integer("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational("1/-2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_integer("12x"); }) == ErrorKind::ParseError);
  CHECK(sigample::floor(Rational(-7, 2)) == -4);
  CHECK(sigample::ceil(Rational(-7, 2)) == -3);
  CHECK(sigample::floor(Rational(5)) == 5);
}

TEST_CASE("matrix basics") {
  const IntegerMatrix m{{2, 1}, {7, 4}};
  CHECK(m.determinant() == 1);
  CHECK(m * m.adjugate() == IntegerMatrix::identity(2));
  CHECK(IntegerMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}.determinant() == -2);
  CHECK(IntegerMatrix{{0, 0}, {0, 5}}.determinant() == 0);
  CHECK(m.transpose() == IntegerMatrix{{2, 7}, {1, 4}});
  CHECK(m.trace() == 6);
  CHECK(m.to_string() == "[[2,1],[7,4]]");
  CHECK(IntegerMatrix{{1, 2}, {3, 4}}.kronecker(IntegerMatrix::identity(2)) ==
        IntegerMatrix{{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}});
  CHECK(kind_of([&] { m + IntegerMatrix::identity(3); }) == ErrorKind::RankMismatch);
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntegerMatrix::identity(2)).coeffs == std::vector<Integer>{1, -2, 1});
  CHECK(char_poly(IntegerMatrix{{0, 1}, {-1, 0}}).coeffs == std::vector<Integer>{1, 0, 1});
  const IntPolynomial p = char_poly(s1() * s2());
  CHECK(p.coeffs == std::vector<Integer>{1, -14, 1});
  CHECK(p.to_string() == "x^2-14x+1");
}

TEST_CASE("char_poly agrees with det(tI - M) at sample points") {
  UnimodularSampler sampler(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(sampler.rng());
    const IntPolynomial p = char_poly(m);
    REQUIRE(p.degree() == static_cast<int>(n));
    for (long t = -3; t <= static_cast<long>(n) + 1; ++t) CHECK(p.evaluate(t) == char_poly_at(m, t));
  }
}

TEST_CASE("quasi_unipotence examples") {
  CHECK(quasi_unipotence(IntegerMatrix::identity(3)).q == std::optional<std::uint64_t>(1));
  CHECK(quasi_unipotence(s1()).q == std::optional<std::uint64_t>(2));
  CHECK_FALSE(quasi_unipotence(s1() * s2()).quasi_unipotent());
  CHECK(quasi_unipotence(IntegerMatrix{{0, -1}, {1, -1}}).q == std::optional<std::uint64_t>(3));
  CHECK(quasi_unipotence(IntegerMatrix{{0, -1}, {1, 1}}).q == std::optional<std::uint64_t>(6));
  CHECK(quasi_unipotence(IntegerMatrix{{-1, 1}, {0, -1}}).q == std::optional<std::uint64_t>(2));
  CHECK(kind_of([] { quasi_unipotence(IntegerMatrix::scalar(2, 2)); }) ==
        ErrorKind::NotInvertibleOverIntegers);
}

TEST_CASE("totient bound") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(cyclotomic_exponent_bound(1) == 2);
  CHECK(cyclotomic_exponent_bound(2) == 12);
  // lcm{m : φ(m) ≤ 4} = lcm(1..6, 8, 10, 12) = 120
  CHECK(cyclotomic_exponent_bound(4) == 120);
}

TEST_CASE("quasi_unipotence matches cyclotomic trial division") {
  UnimodularSampler sampler(11);
  int qu_seen = 0, non_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const IntegerMatrix m = trial % 2 == 0 ? sampler.next(n) : sampler.quasi_unipotent(n);
    REQUIRE(abs(m.determinant()) == 1);
    const bool expected = is_product_of_cyclotomics(char_poly(m).coeffs);
    const QuasiUnipotence got = quasi_unipotence(m);
    CHECK(got.quasi_unipotent() == expected);
    if (got.quasi_unipotent()) {
      ++qu_seen;
      const std::uint64_t q = *got.q;
      CHECK(is_unipotent(mat_pow(m, static_cast<std::int64_t>(q))));
      for (std::uint64_t d = 1; d < q; ++d) CHECK_FALSE(is_unipotent(mat_pow(m, static_cast<std::int64_t>(d))));
    } else {
      ++non_seen;
    }
  }
  CHECK(qu_seen > 20);
  CHECK(non_seen > 10);
}

TEST_CASE("quasi_unipotence invariant under inverse and conjugation") {
  UnimodularSampler sampler(13);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const IntegerMatrix m = trial % 2 == 0 ? sampler.next(n) : sampler.quasi_unipotent(n);
    const IntegerMatrix t = sampler.next(n);
    const auto base = quasi_unipotence(m).q;
    CHECK(quasi_unipotence(unimodular_inverse(m)).q == base);
    CHECK(quasi_unipotence(t * m * unimodular_inverse(t)).q == base);
  }
}

TEST_CASE("nilpotency_index") {
  CHECK(nilpotency_index(IntegerMatrix::identity(2)) == 0);
  CHECK(nilpotency_index(IntegerMatrix{{1, 1}, {0, 1}}) == 1);
  const IntegerMatrix shear{{2, 0, 1}, {2, 1, 0}, {-1, 0, 0}};
  CHECK(nilpotency_index(shear) == 2);
  CHECK(kind_of([] { nilpotency_index(s1()); }) == ErrorKind::NotUnipotent);

  UnimodularSampler sampler(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const IntegerMatrix m = sampler.quasi_unipotent(n);
    const auto q = quasi_unipotence(m).q;
    REQUIRE(q.has_value());
    const IntegerMatrix u = mat_pow(m, static_cast<std::int64_t>(*q));
    const std::size_t k = nilpotency_index(u);
    CHECK(nilpotency_index(unimodular_inverse(u)) == k);
    const IntegerMatrix nil = u - IntegerMatrix::identity(n);
    CHECK(mat_pow(nil, static_cast<std::int64_t>(k + 1)).is_zero());
    if (k > 0) CHECK_FALSE(mat_pow(nil, static_cast<std::int64_t>(k)).is_zero());
  }
}

TEST_CASE("mat_pow") {
  CHECK(mat_pow(s1(), 2) == IntegerMatrix::identity(2));
  CHECK(mat_pow(s1() * s2(), 0) == IntegerMatrix::identity(2));
  const IntegerMatrix inv = mat_pow(s1() * s2(), -1);
  CHECK(inv.determinant() == 1);
  CHECK(inv == unimodular_inverse(s2()) * unimodular_inverse(s1()));
  CHECK(inv * (s1() * s2()) == IntegerMatrix::identity(2));
  CHECK(kind_of([] { mat_pow(IntegerMatrix::scalar(2, 3), -1); }) ==
        ErrorKind::NotInvertibleOverIntegers);
  CHECK(mat_pow(IntegerMatrix::scalar(2, 3), 3) == IntegerMatrix::scalar(2, 27));

  UnimodularSampler sampler(19);
  std::uniform_int_distribution<int> exp(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const IntegerMatrix m = sampler.next(2 + static_cast<std::size_t>(trial % 2), 3, 1);
    const int a = exp(sampler.rng()), b = exp(sampler.rng());
    CHECK(mat_pow(m, a + b) == naive_mul(mat_pow(m, a), mat_pow(m, b)));
  }
}

TEST_CASE("real root isolation") {
  // (x-1)(x-2)(x+3) = x^3 - 7x + 6
  const std::vector<Rational> p{6, -7, 0, 1};
  CHECK(count_real_roots(p, -10, 10) == 3);
  CHECK(count_real_roots(p, 1, 2) == 1);  // (1, 2]
  CHECK(count_real_roots(p, 0, 1) == 1);
  const auto roots = isolate_real_roots(p, Rational(1, 64));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].contains(-3));
  CHECK(roots[1].contains(1));
  CHECK(roots[2].contains(2));
  for (const auto& r : roots) CHECK(r.width() <= Rational(1, 64));
  CHECK_FALSE(largest_real_root(std::vector<Rational>{1, 0, 1}, Rational(1, 8)).has_value());
  // repeated roots count once
  CHECK(count_real_roots(std::vector<Rational>{1, -2, 1}, 0, 5) == 1);
}

TEST_CASE("spectral_radius examples") {
  const RationalInterval id = spectral_radius(IntegerMatrix::identity(2), Rational(1, 100));
  CHECK(id.contains(1));
  CHECK(id.width() <= Rational(1, 100));

  const RationalInterval w = spectral_radius(s1() * s2(), Rational(1, 1000));
  CHECK(w.width() <= Rational(1, 1000));
  // 7 + 4√3: r² - 14r + 1 changes sign across the interval, r > 1
  const auto f = [](const Rational& x) { return Rational(x * x - 14 * x + 1); };
  CHECK(f(w.lo) * f(w.hi) <= 0);
  CHECK(w.lo > 13);

  // companion of x² - 3x + 1, largest root (3 + √5)/2 ≈ 2.618034
  const RationalInterval c = spectral_radius(IntegerMatrix{{0, -1}, {1, 3}}, Rational(1, 1000));
  CHECK(c.lo <= Rational(2618033, 1000000));
  CHECK(c.hi >= Rational(2618034, 1000000));

  // complex dominant eigenvalues: rotation-scaled [[1,-1],[1,1]] has |λ| = √2
  const RationalInterval r = spectral_radius(IntegerMatrix{{1, -1}, {1, 1}}, Rational(1, 1000));
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(spectral_radius(IntegerMatrix(2), Rational(1, 10)).contains(0));
}

TEST_CASE("spectral_radius contains the numeric root modulus") {
  UnimodularSampler sampler(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(sampler.rng());
    const IntPolynomial p = char_poly(m);
    const RationalInterval r = spectral_radius(m, Rational(1, 1000));
    CHECK(r.width() <= Rational(1, 1000));
    const long double rho = numeric_spectral_radius(p);
    CHECK(static_cast<long double>(r.lo.get_d()) <= rho + 1e-4L);
    CHECK(static_cast<long double>(r.hi.get_d()) >= rho - 1e-4L);
    CHECK(r.hi <= cauchy_bound(p.to_rational()));
  }
}
