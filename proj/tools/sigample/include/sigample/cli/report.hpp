#pragma once

#include <string>

#include "sigample/cli/scheme_file.hpp"

namespace sigample::cli {

Json to_json(const Rational& value);
Json to_json(const DivisorClass& d);
Json to_json(const IntegerMatrix& m);
Json to_json(const RationalInterval& interval);
/// {"monomial": [...], "binomial": [...], "text": "..."}
Json to_json(const NumericalPolynomial& p);
Json to_json(std::span<const NumericalPolynomial> family);

Json validate_report(const SchemeFile& file);
Json classify_report(const SchemeFile& file, const AutomorphismAction& action, const Rational& eps);
Json sigma_ample_report(const SchemeFile& file, const AutomorphismAction& action,
                        const AmplenessOracle& oracle, const NamedDivisor& divisor);
Json gkdim_report(const SchemeFile& file, const AutomorphismAction& action,
                  const AmplenessOracle& oracle, const NamedDivisor& divisor);
Json growth_report_json(const SchemeFile& file, const AutomorphismAction& action,
                        const AmplenessOracle& oracle, const NamedDivisor& divisor,
                        std::size_t m_max, const Rational& eps);
Json chi_report(const SchemeFile& file, const AutomorphismAction& action,
                const NamedDivisor& divisor, std::size_t m_max);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace sigample::cli
