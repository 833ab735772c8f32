#pragma once

#include <string>
#include <string_view>

#include "looptor/simplicial.hpp"

namespace looptor {

/// Parses the JSON space format. Syntax errors are reported with their byte offset.
SimplicialSetDesc parse_space_json(std::string_view text);
std::string space_to_json(const SimplicialSet& X);

/// "builtin:<name>[:<params>]" or a path to a JSON file.
SimplicialSet load_space(const std::string& spec);
/// Resolves builtin names only: sphere:N, circle, point, wedge:N,M,..., reduced-simplex:N,
/// collapsed-simplex:N, simplex:N.
SimplicialSet builtin_space(std::string_view name);

std::string read_text_file(const std::string& path);

}  // namespace looptor
