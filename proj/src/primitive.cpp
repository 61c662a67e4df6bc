#include "tagad/primitive.hpp"

#include <array>

namespace tagad {

namespace {

constexpr std::array<PrimInfo, 20> table{{
    {PrimOp::Add, "+", 2, false},
    {PrimOp::Sub, "-", 2, false},
    {PrimOp::Mul, "*", 2, false},
    {PrimOp::Div, "/", 2, false},
    {PrimOp::Neg, "neg", 1, false},
    {PrimOp::Sin, "sin", 1, false},
    {PrimOp::Cos, "cos", 1, false},
    {PrimOp::Exp, "exp", 1, false},
    {PrimOp::Log, "log", 1, false},
    {PrimOp::Sqrt, "sqrt", 1, false},
    {PrimOp::Less, "<", 2, false},
    {PrimOp::Equal, "=", 2, false},
    {PrimOp::Greater, ">", 2, false},
    {PrimOp::Derivative, "D", 2, false},
    {PrimOp::Tangent, "tangent", 2, true},
    {PrimOp::Primal, "primal", 2, true},
    {PrimOp::Swizzle, "swizzle", 3, true},
    {PrimOp::Bundle, "bundle", 3, true},
    {PrimOp::TagLiteral, "tag", 1, true},
    {PrimOp::FreshTag, "fresh-tag", 1, true},
}};

}  // namespace

const PrimInfo& prim_info(PrimOp op) { return table[static_cast<std::size_t>(op)]; }

std::optional<PrimOp> prim_by_name(std::string_view name) {
  for (const auto& info : table) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

}  // namespace tagad
