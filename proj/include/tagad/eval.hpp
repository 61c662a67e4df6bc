#pragma once

#include <string_view>

#include "tagad/expr.hpp"
#include "tagad/mode.hpp"
#include "tagad/parser.hpp"
#include "tagad/value.hpp"

namespace tagad {

/// Call-by-value, left-to-right evaluation. Throws EvalError.
Value eval(const Expr& e, const Env& env, Mode mode);

/// Applies any function value to one argument. Primitives curry and fire
/// once saturated; D allocates its tag at that point.
Value apply(const Value& fn, const Value& arg, Mode mode);

/// Parses and evaluates in the empty environment.
Value run_program(std::string_view source, Mode mode, ParseOptions options = {});

}  // namespace tagad
