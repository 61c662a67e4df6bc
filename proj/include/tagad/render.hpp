#pragma once

#include <string>

#include "tagad/value.hpp"

namespace tagad {

/// Shortest decimal that reads back to the same double; integral values
/// have no decimal point.
std::string render_real(double v);

/// Reals as render_real, duals as `(dual t<id> <primal> <tangent>)`, pairs
/// as `(a . b)`, nil as `()`, functions as `#<closure>` / `#<primitive name>`.
std::string render(const Value& v);

}  // namespace tagad
