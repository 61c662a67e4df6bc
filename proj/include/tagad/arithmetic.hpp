#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "tagad/primitive.hpp"
#include "tagad/value.hpp"

namespace tagad {

/// Primal function and partial derivatives of a differentiable primitive.
///
/// The partials take (possibly perturbed) primal Values and are written in
/// terms of other rules, so nested perturbations propagate through them.
/// Unary rules ignore the second argument of `partial_first`.
struct PrimitiveRule {
  PrimOp op;
  std::string_view name;
  int arity;
  double (*unary)(double) = nullptr;
  double (*binary)(double, double) = nullptr;
  Value (*partial_first)(const Value&, const Value&) = nullptr;
  Value (*partial_second)(const Value&, const Value&) = nullptr;
};

/// The rule for a differentiable primitive, or nullptr for anything else
/// (comparisons, D, internals).
const PrimitiveRule* rule_for(PrimOp op);

/// Validated Dual construction. Both parts must be numeric and must not
/// already carry `tag` anywhere along a Dual spine.
Value bundle(Value primal, Value tangent, Tag tag);

Value apply_unary(const PrimitiveRule& rule, const Value& x);

/// Binary rule application. The youngest tag present in either operand is
/// split out first; the other tags ride along inside the primal and
/// tangent coefficients. Products of two tangents never arise, which is
/// exactly the ε² = 0 truncation.
Value apply_binary(const PrimitiveRule& rule, const Value& x, const Value& y);

Value add(const Value& x, const Value& y);
Value sub(const Value& x, const Value& y);
Value mul(const Value& x, const Value& y);
Value div(const Value& x, const Value& y);
Value neg(const Value& x);
Value sin(const Value& x);
Value cos(const Value& x);
Value exp(const Value& x);
Value log(const Value& x);
Value sqrt(const Value& x);

inline Value operator+(const Value& x, const Value& y) { return add(x, y); }
inline Value operator-(const Value& x, const Value& y) { return sub(x, y); }
inline Value operator*(const Value& x, const Value& y) { return mul(x, y); }
inline Value operator/(const Value& x, const Value& y) { return div(x, y); }
inline Value operator-(const Value& x) { return neg(x); }

/// Comparison on fully unwrapped primals; returns Real 1 or Real 0.
Value compare(PrimOp op, const Value& x, const Value& y);

/// Innermost real along the primal spine. Throws EvalError for non-numeric values.
double primal_most(const Value& v);

bool contains_tag(const Value& v, Tag tag);

/// Largest tag anywhere in a numeric tree.
std::optional<Tag> youngest_tag(const Value& v);

/// Numeric values only: decomposes v = primal + tangent·ε_tag. The tangent
/// is empty when v does not mention `tag` at all.
std::pair<Value, std::optional<Value>> split_by_tag(const Value& v, Tag tag);

/// Numeric shape holds and no tag repeats along any Dual spine.
bool well_formed(const Value& v);

}  // namespace tagad
