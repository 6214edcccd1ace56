#pragma once

#include <span>
#include <string>
#include <string_view>

#include "subnum/core.hpp"

namespace subnum {

/// Names of the built-in substitution configs.
std::span<const std::string_view> bundled_names();

/// Config text for a bundled name; throws Error on unknown names.
std::string_view bundled_config(std::string_view name);

/// Resolves a bundled name first, then falls back to reading a file.
Substitution load_substitution(const std::string& name_or_path);

}  // namespace subnum
