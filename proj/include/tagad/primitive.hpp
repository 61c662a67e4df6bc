#pragma once

#include <optional>
#include <string_view>

namespace tagad {

/// Built-in operations reachable from programs. Internal ones are only
/// visible when a program is parsed with internals exposed.
enum class PrimOp {
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Sin,
  Cos,
  Exp,
  Log,
  Sqrt,
  Less,
  Equal,
  Greater,
  Derivative,
  Tangent,
  Primal,
  Swizzle,
  Bundle,
  TagLiteral,
  FreshTag,
};

struct PrimInfo {
  PrimOp op;
  std::string_view name;
  int arity;
  bool internal;
};

const PrimInfo& prim_info(PrimOp op);

/// Looks up a primitive by its surface name ("+", "sin", "D", ...).
std::optional<PrimOp> prim_by_name(std::string_view name);

}  // namespace tagad
