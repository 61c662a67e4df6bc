#pragma once

#include <string_view>

#include "tagad/expr.hpp"

namespace tagad {

struct ParseOptions {
  /// Makes tangent, primal, swizzle, bundle, tag and fresh-tag visible.
  bool expose_internals = false;
};

/// Parses one S-expression program. `;` starts a line comment.
///
/// Multi-parameter lambdas curry, application is left-associative, and
/// `let` binds sequentially. A symbol naming a primitive refers to it unless
/// it is lexically shadowed. Throws ParseError.
ExprPtr parse(std::string_view text, ParseOptions options = {});

}  // namespace tagad
