#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sigample/ampleness/oracle.hpp"
#include "sigample/exact/spectral.hpp"
#include "sigample/lattice/lattice.hpp"
#include "sigample/numpoly/numerical_polynomial.hpp"

namespace sigample {

/// Some power P^q is unipotent; k + 1 is the size of its largest Jordan block.
struct QuasiUnipotentAction {
  std::uint64_t q = 1;
  std::size_t k = 0;
};

/// Some eigenvalue lies outside the unit circle; radius.lo > 1.
struct NonQuasiUnipotentAction {
  RationalInterval radius;
};

struct AutomorphismClassification {
  IntPolynomial char_poly;
  std::variant<QuasiUnipotentAction, NonQuasiUnipotentAction> kind;

  bool quasi_unipotent() const { return std::holds_alternative<QuasiUnipotentAction>(kind); }
};

inline const Rational& default_eps() {
  static const Rational eps(1, 1000);
  return eps;
}

AutomorphismClassification classify(const IntegerMatrix& p, const Rational& eps = default_eps());

/// Σ_{i=0}^{k} C(m, i) N^i D, the coordinates of P^m D for unipotent P = I + N.
std::vector<NumericalPolynomial> orbit_symbolic(const IntegerMatrix& p, const DivisorClass& d);

/// Δ_m = D + PD + … + P^{m-1}D = Σ_{i=0}^{k} C(m, i+1) N^i D for unipotent P.
/// Throws NotUnipotent.
std::vector<NumericalPolynomial> delta_symbolic(const IntegerMatrix& p, const DivisorClass& d);

/// Δ_m by direct summation; any P, m ≥ 0.
DivisorClass delta_concrete(const IntegerMatrix& p, const DivisorClass& d, std::uint64_t m);

std::vector<Rational> evaluate_family(std::span<const NumericalPolynomial> family, const Rational& m);

enum class NoReason { NotQuasiUnipotent, NoAmpleDelta };

struct SigmaAmpleVerdict {
  bool sigma_ample = false;
  std::optional<NoReason> reason;
  /// The remaining fields describe the unipotent reduction and are filled
  /// whenever the action is quasi-unipotent.
  std::uint64_t q = 0;
  std::size_t k = 0;
  std::optional<Integer> witness_m;
  DivisorClass reduced_divisor;  // D' = Δ_q(D)
  IntegerMatrix reduced_action;  // P' = P^q
  std::vector<NumericalPolynomial> family;  // Δ'_m
};

/// Decides σ-ampleness exactly. With q the minimal power making P unipotent,
/// Δ'_m(D') for (D', P') = (Δ_q(D), P^q) equals Δ_{qm}(D). D is σ-ample iff
/// Δ_q(D) is σ^q-ample, and for the unipotent P' that holds iff some Δ'_m is
/// ample. A non-quasi-unipotent P admits no σ-ample class at all.
/// The witness is the minimal such m for the reduced pair.
SigmaAmpleVerdict is_sigma_ample(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                                 const AmplenessOracle& oracle, const DivisorClass& d);

struct ComponentGrowth {
  std::string component;
  NumericalPolynomial self_intersection;  // (Δ'_m^{n_i})_{X_i}
};

struct GkDimensionReport {
  std::size_t gk_dim = 0;
  std::size_t degree = 0;
  std::uint64_t q = 1;
  std::size_t k = 0;
  /// Power of σ and class used after reduction (Δ at the reduction power).
  std::uint64_t reduction_power = 1;
  DivisorClass reduced_divisor;
  std::vector<ComponentGrowth> components;
};

/// GKdim B = 1 + max_i deg (Δ_m^{n_i})_{X_i} after reducing to a unipotent
/// action and ample class. A non-ample but σ-ample D is replaced by Δ at its
/// witness. Throws NotQuasiUnipotent, NotAmple.
GkDimensionReport gk_dimension(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                               const AmplenessOracle& oracle, const DivisorClass& d);

/// χ(O_X(D)) = Σ_components Σ_j T_j(D, …, D)/j!; MissingToddData without Todd data.
Rational euler_characteristic(const SchemeDescriptor& scheme, const DivisorClass& d);

/// χ(O_X(Δ_m)) for m = 1 … m_max, Δ_m summed directly.
std::vector<Rational> euler_char_series(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                                        const DivisorClass& d, std::size_t m_max);

/// χ(O_X(Δ_m)) as a polynomial in m for unipotent P.
NumericalPolynomial euler_char_polynomial(const SchemeDescriptor& scheme, const IntegerMatrix& p,
                                          const DivisorClass& d);

struct PolynomialGrowth {
  std::size_t gk_dim = 0;
  std::size_t degree = 0;
};

struct ExponentialGrowth {
  RationalInterval radius;
  /// χ_{m+1}/χ_m for m = 1 … m_max; absent where χ_m = 0.
  std::vector<std::optional<Rational>> ratio_samples;
  /// (Σ_{i≤n} χ_i)^{1/n} at n = m_max, approximate.
  double growth_statistic = 0;
  /// Σ_{i≤n} χ_i > (1 + 1/1000)^n, decided exactly.
  bool exceeds_threshold = false;
};

struct GrowthReport {
  std::variant<PolynomialGrowth, ExponentialGrowth> kind;
};

GrowthReport growth_report(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                           const AmplenessOracle& oracle, const DivisorClass& d, std::size_t m_max,
                           const Rational& eps = default_eps());

/// Multi-indices i_1 ≤ … ≤ i_n with Σ i_j > k(n-1) whose intersection
/// (N^{i_1}D. … .N^{i_n}D) is nonzero. Always empty for a form-preserving
/// unipotent action; exposed as a diagnostic.
std::vector<MultiIndex> upper_bound_vanishing_violations(const ComponentDescriptor& component,
                                                         const IntegerMatrix& p,
                                                         const DivisorClass& d);

}  // namespace sigample
