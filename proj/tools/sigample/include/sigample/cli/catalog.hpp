#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigample/cli/scheme_file.hpp"

namespace sigample::cli {

/// Builtin examples, sorted by name.
std::vector<std::string> catalog_names();

/// Throws UnknownName for anything not in catalog_names().
SchemeFile catalog_entry(std::string_view name);

bool in_catalog(std::string_view name);

}  // namespace sigample::cli
