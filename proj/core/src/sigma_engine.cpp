#include "sigample/engine/sigma_engine.hpp"

#include <algorithm>
#include <cmath>

#include "sigample/error.hpp"

namespace sigample {

namespace {

void require_rank(const SchemeDescriptor& scheme, const IntegerMatrix& p, const DivisorClass& d) {
  if (p.size() != scheme.rank || d.rank() != scheme.rank) {
    throw Error(ErrorKind::RankMismatch,
                "scheme rank " + std::to_string(scheme.rank) + ", action size " +
                    std::to_string(p.size()) + ", class rank " + std::to_string(d.rank()));
  }
}

void require_valid(const SchemeDescriptor& scheme, const AutomorphismAction& action) {
  const auto report = validate(scheme, action);
  if (!report.valid()) {
    throw Error(ErrorKind::ValidationError,
                "action '" + action.name + "' does not preserve the numerical data");
  }
}

/// [D, ND, N²D, …, N^k D].
std::vector<DivisorClass> nilpotent_orbit(const IntegerMatrix& p, const DivisorClass& d,
                                          std::size_t k) {
  const IntegerMatrix n = p - IntegerMatrix::identity(p.size());
  std::vector<DivisorClass> out{d};
  for (std::size_t i = 0; i < k; ++i) out.push_back(apply(n, out.back()));
  return out;
}

std::vector<NumericalPolynomial> binomial_combination(const std::vector<DivisorClass>& terms,
                                                      std::size_t shift) {
  const std::size_t rank = terms.front().rank();
  std::vector<NumericalPolynomial> out(rank);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const NumericalPolynomial b = NumericalPolynomial::binomial(i + shift);
    for (std::size_t r = 0; r < rank; ++r) {
      if (terms[i].coords[r] != 0) out[r] += b * terms[i].coords[r];
    }
  }
  return out;
}

Rational factorial(std::size_t j) {
  Integer f = 1;
  for (std::size_t i = 2; i <= j; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

void require_todd(const SchemeDescriptor& scheme) {
  for (const auto& c : scheme.components) {
    if (!c.todd) {
      throw Error(ErrorKind::MissingToddData,
                  "component '" + c.name + "' carries no Todd functionals");
    }
  }
}

}  // namespace

AutomorphismClassification classify(const IntegerMatrix& p, const Rational& eps) {
  AutomorphismClassification out{char_poly(p), QuasiUnipotentAction{}};
  const QuasiUnipotence qu = quasi_unipotence(p);
  if (qu.quasi_unipotent()) {
    const std::uint64_t q = *qu.q;
    out.kind = QuasiUnipotentAction{q, nilpotency_index(mat_pow(p, static_cast<std::int64_t>(q)))};
    return out;
  }
  Rational width = eps;
  RationalInterval radius = spectral_radius(p, width);
  while (radius.lo <= 1) {
    width /= 2;
    radius = spectral_radius(p, width);
  }
  out.kind = NonQuasiUnipotentAction{radius};
  return out;
}

std::vector<NumericalPolynomial> orbit_symbolic(const IntegerMatrix& p, const DivisorClass& d) {
  const std::size_t k = nilpotency_index(p);
  if (d.rank() != p.size()) throw Error(ErrorKind::RankMismatch, "class rank differs from action size");
  return binomial_combination(nilpotent_orbit(p, d, k), 0);
}

std::vector<NumericalPolynomial> delta_symbolic(const IntegerMatrix& p, const DivisorClass& d) {
  const std::size_t k = nilpotency_index(p);
  if (d.rank() != p.size()) throw Error(ErrorKind::RankMismatch, "class rank differs from action size");
  return binomial_combination(nilpotent_orbit(p, d, k), 1);
}

DivisorClass delta_concrete(const IntegerMatrix& p, const DivisorClass& d, std::uint64_t m) {
  DivisorClass sum = DivisorClass::zero(d.rank());
  DivisorClass term = d;
  for (std::uint64_t j = 0; j < m; ++j) {
    sum += term;
    if (j + 1 < m) term = apply(p, term);
  }
  return sum;
}

std::vector<Rational> evaluate_family(std::span<const NumericalPolynomial> family, const Rational& m) {
  std::vector<Rational> out;
  out.reserve(family.size());
  for (const auto& f : family) out.push_back(f(m));
  return out;
}

SigmaAmpleVerdict is_sigma_ample(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                                 const AmplenessOracle& oracle, const DivisorClass& d) {
  require_rank(scheme, action.matrix, d);
  require_valid(scheme, action);
  SigmaAmpleVerdict verdict;
  const QuasiUnipotence qu = quasi_unipotence(action.matrix);
  if (!qu.quasi_unipotent()) {
    verdict.reason = NoReason::NotQuasiUnipotent;
    return verdict;
  }
  verdict.q = *qu.q;
  verdict.reduced_divisor = delta_concrete(action.matrix, d, verdict.q);
  verdict.reduced_action = mat_pow(action.matrix, static_cast<std::int64_t>(verdict.q));
  verdict.k = nilpotency_index(verdict.reduced_action);
  verdict.family = delta_symbolic(verdict.reduced_action, verdict.reduced_divisor);
  verdict.witness_m = is_ample_symbolic(oracle, verdict.family);
  if (verdict.witness_m) {
    verdict.sigma_ample = true;
  } else {
    verdict.reason = NoReason::NoAmpleDelta;
  }
  return verdict;
}

GkDimensionReport gk_dimension(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                               const AmplenessOracle& oracle, const DivisorClass& d) {
  require_rank(scheme, action.matrix, d);
  const QuasiUnipotence qu = quasi_unipotence(action.matrix);
  if (!qu.quasi_unipotent()) {
    throw Error(ErrorKind::NotQuasiUnipotent,
                "action '" + action.name + "' is not quasi-unipotent; the ring grows exponentially");
  }
  GkDimensionReport report;
  report.q = *qu.q;
  std::uint64_t power = report.q;
  if (!is_ample(oracle, d)) {
    // GKdim B(σ, D) = GKdim B(σ^m, Δ_m): move to the first ample Δ
    const SigmaAmpleVerdict verdict = is_sigma_ample(scheme, action, oracle, d);
    if (!verdict.sigma_ample) {
      throw Error(ErrorKind::NotAmple, "class " + d.to_string() + " is neither ample nor σ-ample");
    }
    power = report.q * verdict.witness_m->get_ui();
  }
  report.reduction_power = power;
  const IntegerMatrix reduced = mat_pow(action.matrix, static_cast<std::int64_t>(power));
  report.reduced_divisor = delta_concrete(action.matrix, d, power);
  report.k = nilpotency_index(reduced);
  const auto family = delta_symbolic(reduced, report.reduced_divisor);

  std::optional<std::size_t> degree;
  for (const auto& c : scheme.components) {
    NumericalPolynomial poly = c.top_form.evaluate_diagonal<NumericalPolynomial>(family);
    if (poly.degree() && (!degree || *poly.degree() > *degree)) degree = poly.degree();
    report.components.push_back(ComponentGrowth{c.name, std::move(poly)});
  }
  if (!degree) {
    throw Error(ErrorKind::NotAmple,
                "every self-intersection of Δ_m vanishes; the class is not ample on the scheme");
  }
  report.degree = *degree;
  report.gk_dim = *degree + 1;
  return report;
}

Rational euler_characteristic(const SchemeDescriptor& scheme, const DivisorClass& d) {
  require_todd(scheme);
  Rational chi = 0;
  for (const auto& c : scheme.components) {
    for (std::size_t j = 0; j < c.todd->size(); ++j) {
      chi += (*c.todd)[j].evaluate_diagonal<Rational>(d.coords) / factorial(j);
    }
  }
  return chi;
}

std::vector<Rational> euler_char_series(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                                        const DivisorClass& d, std::size_t m_max) {
  require_rank(scheme, action.matrix, d);
  require_todd(scheme);
  std::vector<Rational> out;
  out.reserve(m_max);
  DivisorClass delta = DivisorClass::zero(d.rank());
  DivisorClass term = d;
  for (std::size_t m = 1; m <= m_max; ++m) {
    delta += term;
    term = apply(action.matrix, term);
    out.push_back(euler_characteristic(scheme, delta));
  }
  return out;
}

NumericalPolynomial euler_char_polynomial(const SchemeDescriptor& scheme, const IntegerMatrix& p,
                                          const DivisorClass& d) {
  require_rank(scheme, p, d);
  require_todd(scheme);
  const auto family = delta_symbolic(p, d);
  NumericalPolynomial chi;
  for (const auto& c : scheme.components) {
    for (std::size_t j = 0; j < c.todd->size(); ++j) {
      chi += (*c.todd)[j].evaluate_diagonal<NumericalPolynomial>(family) * (1 / factorial(j));
    }
  }
  return chi;
}

GrowthReport growth_report(const SchemeDescriptor& scheme, const AutomorphismAction& action,
                           const AmplenessOracle& oracle, const DivisorClass& d, std::size_t m_max,
                           const Rational& eps) {
  require_rank(scheme, action.matrix, d);
  if (!is_ample(oracle, d)) {
    throw Error(ErrorKind::NotAmple, "growth needs an ample class, got " + d.to_string());
  }
  const AutomorphismClassification cls = classify(action.matrix, eps);
  if (cls.quasi_unipotent()) {
    const GkDimensionReport gk = gk_dimension(scheme, action, oracle, d);
    return GrowthReport{PolynomialGrowth{gk.gk_dim, gk.degree}};
  }
  if (m_max == 0) throw Error(ErrorKind::InvalidArgument, "m_max must be positive");
  ExponentialGrowth exp;
  exp.radius = std::get<NonQuasiUnipotentAction>(cls.kind).radius;
  const auto chi = euler_char_series(scheme, action, d, m_max + 1);
  for (std::size_t m = 1; m <= m_max; ++m) {
    const Rational& cur = chi[m - 1];
    if (cur == 0) {
      exp.ratio_samples.emplace_back(std::nullopt);
    } else {
      exp.ratio_samples.emplace_back(chi[m] / cur);
    }
  }
  Rational partial = 0;
  for (std::size_t i = 0; i < m_max; ++i) partial += chi[i];
  Rational threshold = 1;
  const Rational base(1001, 1000);
  for (std::size_t i = 0; i < m_max; ++i) threshold *= base;
  exp.exceeds_threshold = partial > threshold;
  exp.growth_statistic =
      partial > 0 ? std::pow(partial.get_d(), 1.0 / static_cast<double>(m_max)) : 0.0;
  return GrowthReport{exp};
}

std::vector<MultiIndex> upper_bound_vanishing_violations(const ComponentDescriptor& component,
                                                         const IntegerMatrix& p,
                                                         const DivisorClass& d) {
  const std::size_t k = nilpotency_index(p);
  const std::size_t n = component.dim;
  const auto orbit = nilpotent_orbit(p, d, k);
  std::vector<MultiIndex> out;
  // non-decreasing tuples over {0..k}
  const SymmetricForm shape(k + 1, n);
  for (const auto& idx : shape.basis_tuples()) {
    std::size_t total = 0;
    for (std::size_t i : idx) total += i;
    if (total <= k * (n - 1)) continue;
    std::vector<DivisorClass> args;
    for (std::size_t i : idx) args.push_back(orbit[i]);
    if (intersect(component, args) != 0) out.push_back(idx);
  }
  return out;
}

}  // namespace sigample
