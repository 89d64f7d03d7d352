#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sigample/exact/scalar.hpp"

namespace sigample {

/// Closed interval with exact rational endpoints, lo ≤ hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  double midpoint_approx() const { return Rational((lo + hi) / 2).get_d(); }
  bool operator==(const RationalInterval&) const = default;
};

/// Every complex root z of a nonzero polynomial satisfies
/// |z| < 1 + max_{i<n} |a_i| / |a_n|. Constants report 1.
Rational cauchy_bound(std::span<const Rational> coeffs);

/// Number of distinct real roots in the half-open interval (lo, hi], via a
/// Sturm sequence. Zero polynomial is rejected with InvalidArgument.
std::size_t count_real_roots(std::span<const Rational> coeffs,
                             const Rational& lo, const Rational& hi);

/// Isolates all distinct real roots: each returned interval (lo, hi] holds
/// exactly one root, widths are ≤ max_width, ordered ascending and disjoint.
std::vector<RationalInterval> isolate_real_roots(std::span<const Rational> coeffs,
                                                 const Rational& max_width);

/// Largest real root refined to width ≤ max_width, or nothing when there is no
/// real root. The root lies in (lo, hi].
std::optional<RationalInterval> largest_real_root(std::span<const Rational> coeffs,
                                                const Rational& max_width);

}  // namespace sigample
