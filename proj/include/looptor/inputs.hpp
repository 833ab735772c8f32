#pragma once

#include <memory>
#include <string>

#include "looptor/twisted.hpp"

namespace looptor {

/// builtin:cyclic:M, or a JSON file {"elements": [names], "table": [[index, ...], ...]}.
FiniteGroup load_group(const std::string& spec);

/// builtin:regular, builtin:points:K (trivial action), or a JSON file
/// {"space": <space object or spec string>, "action": {element: {generator: generator}}}.
/// Generators missing from an element's map are fixed by it.
GroupAction load_fiber(const std::string& spec, const FiniteGroup& group);

/// builtin:trivial, builtin:generator (every edge to element 1), or a JSON file
/// {generator: element} on positive-dimensional generators.
TwistingFunction load_twist(const std::string& spec, const SimplicialSet& X, const FiniteGroup& group);

}  // namespace looptor
