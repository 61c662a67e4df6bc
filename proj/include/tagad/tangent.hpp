#pragma once

#include "tagad/mode.hpp"
#include "tagad/value.hpp"

namespace tagad {

/// Coefficient of ε_tag in v. Distributes over pairs, passes through
/// foreign tags, and turns functions into functions whose results are
/// projected, in the manner selected by `mode`.
Value tangent(Tag tag, const Value& v, Mode mode);

/// v with ε_tag set to zero. Function values are handled as in tangent().
Value primal(Tag tag, const Value& v, Mode mode);

/// Exchanges `from` and `to` throughout v. Functions are wrapped with the
/// exchange on both their argument and their result; `mode` is the mode the
/// wrapped function is applied under.
Value swizzle(Tag from, Tag to, const Value& v, Mode mode);

/// Tangent of f at x along the unit direction, under a tag allocated by
/// this call.
Value derivative(const Value& f, const Value& x, Mode mode);

}  // namespace tagad
