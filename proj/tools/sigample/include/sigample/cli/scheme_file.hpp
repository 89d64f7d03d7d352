#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigample/sigample.hpp"

namespace sigample::cli {

using Json = nlohmann::ordered_json;

struct NamedDivisor {
  std::string name;
  DivisorClass divisor;

  bool operator==(const NamedDivisor&) const = default;
};

/// One self-contained scheme document: the numerical data of X together
/// with named ample-cone oracles, automorphism actions and divisor classes.
struct SchemeFile {
  std::string name;
  SchemeDescriptor scheme;
  std::vector<AmplenessOracle> oracles;
  std::vector<AutomorphismAction> automorphisms;
  std::vector<NamedDivisor> divisors;

  const AmplenessOracle& oracle(std::string_view name) const;
  const AutomorphismAction& automorphism(std::string_view name) const;
  const DivisorClass& divisor(std::string_view name) const;

  /// The oracle named by `name`, or the only oracle when `name` is empty.
  const AmplenessOracle& pick_oracle(std::string_view name) const;

  bool operator==(const SchemeFile&) const = default;
};

/// Parses a scheme document. Syntax errors raise ParseError with line and
/// column; schema errors raise ParseError with a JSON pointer to the value.
SchemeFile parse_scheme(std::string_view text);
SchemeFile parse_scheme_json(const Json& doc);

Json to_json(const SchemeFile& file);
/// Stable pretty-printed document; parse_scheme(serialize(f)) == f.
std::string serialize(const SchemeFile& file);

/// A readable file path, else a builtin catalog entry (UnknownName otherwise).
SchemeFile load_scheme(const std::string& path_or_name);

}  // namespace sigample::cli
