#include "sigample/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace sigample::cli {

namespace {

std::string approx(const Rational& value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value.get_d());
  return buf;
}

Json int_poly_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_string(c));
  return Json{{"text", p.to_string()}, {"coefficients", std::move(coeffs)}};
}

Json classification_json(const AutomorphismClassification& cls) {
  Json out;
  out["char_poly"] = int_poly_json(cls.char_poly);
  if (const auto* qu = std::get_if<QuasiUnipotentAction>(&cls.kind)) {
    out["quasi_unipotent"] = true;
    out["q"] = qu->q;
    out["k"] = qu->k;
    out["jordan_block_size"] = qu->k + 1;
    if (qu->k % 2 != 0) out["geometrically_unrealizable"] = true;
  } else {
    const auto& nq = std::get<NonQuasiUnipotentAction>(cls.kind);
    out["quasi_unipotent"] = false;
    out["spectral_radius"] = to_json(nq.radius);
  }
  return out;
}

Json header(std::string_view command, const SchemeFile& file) {
  Json out;
  out["command"] = command;
  out["scheme"] = file.name;
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const DivisorClass& d) {
  Json out = Json::array();
  for (const auto& c : d.coords) out.push_back(to_string(c));
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RationalInterval& interval) {
  return Json{{"lo", to_string(interval.lo)},
              {"hi", to_string(interval.hi)},
              {"width", to_string(interval.width())},
              {"approx", approx((interval.lo + interval.hi) / 2)}};
}

Json to_json(const NumericalPolynomial& p) {
  Json mono = Json::array();
  for (const auto& c : p.monomial()) mono.push_back(to_string(c));
  Json binom = Json::array();
  for (const auto& c : p.binomial_coefficients()) binom.push_back(to_string(c));
  return Json{{"text", p.to_string()}, {"monomial", std::move(mono)}, {"binomial", std::move(binom)}};
}

Json to_json(std::span<const NumericalPolynomial> family) {
  Json out = Json::array();
  for (const auto& p : family) out.push_back(to_json(p));
  return out;
}

Json validate_report(const SchemeFile& file) {
  Json out = header("validate", file);
  bool valid = true;
  const auto scheme_issues = check_scheme(file.scheme);
  valid = valid && scheme_issues.empty();
  out["scheme_issues"] = scheme_issues;

  Json oracles = Json::array();
  for (const auto& o : file.oracles) {
    const auto issues = check_oracle(o, file.scheme.rank);
    valid = valid && issues.empty();
    oracles.push_back(Json{{"name", o.name}, {"ok", issues.empty()}, {"issues", issues}});
  }
  out["oracles"] = std::move(oracles);

  Json autos = Json::array();
  for (const auto& a : file.automorphisms) {
    const ActionValidation v = validate(file.scheme, a);
    Json ja;
    ja["name"] = a.name;
    ja["determinant"] = v.rank_ok ? to_string(v.determinant) : std::string("n/a");
    ja["unimodular"] = v.unimodular;
    ja["form_invariant"] = v.rank_ok && v.failures.empty();
    Json failures = Json::array();
    for (const auto& f : v.failures) {
      failures.push_back(Json{{"component", f.component},
                              {"index", f.index},
                              {"expected", to_string(f.expected)},
                              {"actual", to_string(f.actual)}});
    }
    ja["failures"] = std::move(failures);
    bool ok = v.valid();
    Json preserved = Json::object();
    for (const auto& o : file.oracles) {
      const bool keeps = v.rank_ok && check_oracle(o, file.scheme.rank).empty() && preserved_by(o, a.matrix);
      preserved[o.name] = keeps;
      ok = ok && keeps;
    }
    ja["preserves_oracles"] = std::move(preserved);
    ja["valid"] = ok;
    valid = valid && ok;
    autos.push_back(std::move(ja));
  }
  out["automorphisms"] = std::move(autos);

  Json divs = Json::array();
  for (const auto& d : file.divisors) {
    Json jd{{"name", d.name}, {"coords", to_json(d.divisor)}};
    Json ample = Json::object();
    for (const auto& o : file.oracles) {
      if (check_oracle(o, file.scheme.rank).empty()) ample[o.name] = is_ample(o, d.divisor);
    }
    jd["ample"] = std::move(ample);
    divs.push_back(std::move(jd));
  }
  out["divisors"] = std::move(divs);
  out["valid"] = valid;
  return out;
}

Json classify_report(const SchemeFile& file, const AutomorphismAction& action, const Rational& eps) {
  Json out = header("classify", file);
  out["automorphism"] = action.name;
  out["matrix"] = to_json(action.matrix);
  const Json cls = classification_json(classify(action.matrix, eps));
  for (const auto& [key, value] : cls.items()) out[key] = value;
  return out;
}

Json sigma_ample_report(const SchemeFile& file, const AutomorphismAction& action,
                        const AmplenessOracle& oracle, const NamedDivisor& divisor) {
  Json out = header("sigma-ample", file);
  out["automorphism"] = action.name;
  out["divisor"] = divisor.name;
  out["oracle"] = oracle.name;
  const SigmaAmpleVerdict v = is_sigma_ample(file.scheme, action, oracle, divisor.divisor);
  out["sigma_ample"] = v.sigma_ample;
  if (v.reason) {
    out["reason"] = *v.reason == NoReason::NotQuasiUnipotent ? "not_quasi_unipotent" : "no_ample_delta";
  }
  if (v.reason != NoReason::NotQuasiUnipotent) {
    Json trace;
    trace["q"] = v.q;
    trace["k"] = v.k;
    trace["reduced_divisor"] = to_json(v.reduced_divisor);
    trace["reduced_action"] = to_json(v.reduced_action);
    trace["delta"] = to_json(std::span<const NumericalPolynomial>(v.family));
    Json samples = Json::array();
    for (long m = 1; m <= 3; ++m) {
      samples.push_back(Json{{"m", m}, {"class", to_json(DivisorClass(evaluate_family(v.family, Rational(m))))}});
    }
    trace["first_deltas"] = std::move(samples);
    out["reduction"] = std::move(trace);
  }
  if (v.witness_m) out["witness_m"] = to_string(*v.witness_m);
  return out;
}

Json gkdim_report(const SchemeFile& file, const AutomorphismAction& action, const AmplenessOracle& oracle,
                  const NamedDivisor& divisor) {
  Json out = header("gkdim", file);
  out["automorphism"] = action.name;
  out["divisor"] = divisor.name;
  out["oracle"] = oracle.name;
  const GkDimensionReport r = gk_dimension(file.scheme, action, oracle, divisor.divisor);
  out["gk_dimension"] = r.gk_dim;
  out["degree"] = r.degree;
  out["q"] = r.q;
  out["k"] = r.k;
  out["reduction_power"] = r.reduction_power;
  out["reduced_divisor"] = to_json(r.reduced_divisor);
  Json comps = Json::array();
  for (const auto& c : r.components) {
    const auto dl = degree_leading(c.self_intersection);
    comps.push_back(Json{{"component", c.component},
                         {"self_intersection", to_json(c.self_intersection)},
                         {"degree", dl.degree ? Json(*dl.degree) : Json("-inf")},
                         {"leading", to_string(dl.leading)}});
  }
  out["components"] = std::move(comps);
  return out;
}

Json growth_report_json(const SchemeFile& file, const AutomorphismAction& action,
                        const AmplenessOracle& oracle, const NamedDivisor& divisor, std::size_t m_max,
                        const Rational& eps) {
  Json out = header("growth", file);
  out["automorphism"] = action.name;
  out["divisor"] = divisor.name;
  out["oracle"] = oracle.name;
  out["mmax"] = m_max;
  const GrowthReport r = growth_report(file.scheme, action, oracle, divisor.divisor, m_max, eps);
  if (const auto* poly = std::get_if<PolynomialGrowth>(&r.kind)) {
    out["growth"] = "polynomial";
    out["gk_dimension"] = poly->gk_dim;
    out["degree"] = poly->degree;
  } else {
    const auto& e = std::get<ExponentialGrowth>(r.kind);
    out["growth"] = "exponential";
    out["spectral_radius"] = to_json(e.radius);
    Json ratios = Json::array();
    for (std::size_t m = 0; m < e.ratio_samples.size(); ++m) {
      const auto& s = e.ratio_samples[m];
      ratios.push_back(Json{{"m", m + 1},
                            {"ratio", s ? Json(to_string(*s)) : Json(nullptr)},
                            {"approx", s ? Json(approx(*s)) : Json(nullptr)}});
    }
    out["ratio_samples"] = std::move(ratios);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", e.growth_statistic);
    out["growth_statistic"] = buf;
    out["exceeds_threshold"] = e.exceeds_threshold;
  }
  return out;
}

Json chi_report(const SchemeFile& file, const AutomorphismAction& action, const NamedDivisor& divisor,
                std::size_t m_max) {
  Json out = header("chi", file);
  out["automorphism"] = action.name;
  out["divisor"] = divisor.name;
  out["mmax"] = m_max;
  const auto series = euler_char_series(file.scheme, action, divisor.divisor, m_max);
  Json values = Json::array();
  for (std::size_t m = 0; m < series.size(); ++m) {
    values.push_back(Json{{"m", m + 1}, {"chi", to_string(series[m])}});
  }
  out["series"] = std::move(values);
  if (is_unipotent(action.matrix)) {
    out["polynomial"] = to_json(euler_char_polynomial(file.scheme, action.matrix, divisor.divisor));
  }
  return out;
}

namespace {

void render(const Json& value, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      render(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << key << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << indent << "  - [" << i << "]\n";
        render(v[i], indent + "    ", os);
      }
    } else if (v.is_string()) {
      os << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

}  // namespace sigample::cli
