#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sigample/lattice/lattice.hpp"
#include "sigample/numpoly/numerical_polynomial.hpp"

namespace sigample {

/// Ample cone cut out by finitely many integer linear functionals; a class is
/// ample when every functional is strictly positive on it.
struct PolyhedralCone {
  std::vector<std::vector<Integer>> facets;

  bool operator==(const PolyhedralCone&) const = default;
};

/// Nakai-type description on a surface: D is ample iff (D.D) > 0, (D.A) > 0
/// and (D.C_i) > 0 for each listed curve class. Completeness of the
/// obstruction list is the caller's assertion; with no obstructions this is
/// the component of the positive cone containing A.
struct SurfacePositiveCone {
  ComponentDescriptor component;
  DivisorClass reference_ample;
  std::vector<DivisorClass> obstructions;

  bool operator==(const SurfacePositiveCone&) const = default;
};

struct AmplenessOracle {
  std::string name;
  std::variant<PolyhedralCone, SurfacePositiveCone> cone;

  bool operator==(const AmplenessOracle&) const = default;
};

/// Sanity problems of an oracle on a rank-ℓ lattice (empty when fine).
std::vector<std::string> check_oracle(const AmplenessOracle& oracle, std::size_t rank);

bool is_ample(const AmplenessOracle& oracle, const DivisorClass& d);
/// Same data with non-strict inequalities.
bool is_nef(const AmplenessOracle& oracle, const DivisorClass& d);

/// One polynomial per defining inequality after substituting a one-parameter
/// family of classes (coordinates are polynomials in m).
std::vector<NumericalPolynomial> ample_conditions(const AmplenessOracle& oracle,
                                                  std::span<const NumericalPolynomial> family);

/// Minimal m ≥ 1 with family(m) ample, if any.
std::optional<Integer> is_ample_symbolic(const AmplenessOracle& oracle,
                                         std::span<const NumericalPolynomial> family);

/// Whether P maps the described cone onto itself: the facet set (resp. the
/// obstruction set) is permuted up to positive scaling, and for surface cones
/// P·A stays ample.
bool preserved_by(const AmplenessOracle& oracle, const IntegerMatrix& p);

}  // namespace sigample
