#include "tagad/eval.hpp"

#include <cmath>
#include <vector>

#include "tagad/arithmetic.hpp"
#include "tagad/error.hpp"
#include "tagad/tangent.hpp"

namespace tagad {

namespace {

Tag tag_argument(std::string_view who, const Value& v) {
  if (const auto* t = v.get_if<TagRef>()) return t->tag;
  throw EvalError(std::string(who) + ": expected a tag, got " + std::string(kind_name(v)));
}

Value fire(PrimOp op, const std::vector<Value>& args, Mode mode) {
  if (const PrimitiveRule* rule = rule_for(op)) {
    return rule->arity == 1 ? apply_unary(*rule, args[0]) : apply_binary(*rule, args[0], args[1]);
  }
  switch (op) {
    case PrimOp::Less:
    case PrimOp::Equal:
    case PrimOp::Greater: return compare(op, args[0], args[1]);
    case PrimOp::Derivative: return derivative(args[0], args[1], mode);
    case PrimOp::Tangent: return tangent(tag_argument("tangent", args[0]), args[1], mode);
    case PrimOp::Primal: return primal(tag_argument("primal", args[0]), args[1], mode);
    case PrimOp::Swizzle:
      return swizzle(tag_argument("swizzle", args[0]), tag_argument("swizzle", args[1]), args[2],
                     mode);
    case PrimOp::Bundle: return bundle(args[0], args[1], tag_argument("bundle", args[2]));
    case PrimOp::TagLiteral: {
      double id = primal_most(args[0]);
      if (!(id >= 0) || id != std::floor(id)) {
        throw EvalError("tag: id must be a non-negative integer");
      }
      return Value::tag_ref(Tag{static_cast<std::uint64_t>(id)});
    }
    case PrimOp::FreshTag: return Value::tag_ref(fresh_tag());
    default: break;
  }
  throw EvalError("no implementation for primitive " + std::string(prim_info(op).name));
}

const Value& primitive_value(PrimOp op) {
  static const std::vector<Value> cache = [] {
    std::vector<Value> values;
    for (int k = 0; k <= static_cast<int>(PrimOp::FreshTag); ++k) {
      values.push_back(Value::primitive(static_cast<PrimOp>(k)));
    }
    return values;
  }();
  return cache[static_cast<std::size_t>(op)];
}

Value apply_at(const Value& fn, const Value& arg, Mode mode, SourcePos pos) {
  try {
    return apply(fn, arg, mode);
  } catch (const EvalError& e) {
    throw e.at(pos);
  }
}

}  // namespace

Value apply(const Value& fn, const Value& arg, Mode mode) {
  if (const auto* c = fn.get_if<Closure>()) return eval(*c->body, c->env.extend(c->param, arg), mode);
  if (const auto* w = fn.get_if<Wrapper>()) return w->fn(arg);
  if (const auto* p = fn.get_if<Primitive>()) {
    if (prim_info(p->op).arity == 1) return fire(p->op, {arg}, mode);
    return Value::partial(p->op, {arg});
  }
  if (const auto* p = fn.get_if<PartialPrimitive>()) {
    std::vector<Value> args = p->args;
    args.push_back(arg);
    if (static_cast<int>(args.size()) == prim_info(p->op).arity) return fire(p->op, args, mode);
    return Value::partial(p->op, std::move(args));
  }
  throw EvalError("cannot apply a " + std::string(kind_name(fn)));
}

Value eval(const Expr& e, const Env& env, Mode mode) {
  // Let bodies, if branches and closure calls in tail position loop here
  // instead of recursing.
  const Expr* cur = &e;
  ExprPtr keep;
  Env local = env;
  while (true) {
    const Expr& x = *cur;
    if (const auto* v = std::get_if<ast::Var>(&x.node)) {
      if (const Value* found = local.lookup(v->name)) return *found;
      throw EvalError("unbound variable '" + v->name + "'", x.pos);
    }
    if (const auto* lit = std::get_if<ast::Lit>(&x.node)) return Value::real(lit->value);
    if (const auto* lam = std::get_if<ast::Lam>(&x.node)) return Value::closure(lam->param, lam->body, local);
    if (const auto* app = std::get_if<ast::App>(&x.node)) {
      Value fn = eval(*app->fn, local, mode);
      Value arg = eval(*app->arg, local, mode);
      if (const auto* c = fn.get_if<Closure>()) {
        ExprPtr body = c->body;
        local = c->env.extend(c->param, std::move(arg));
        keep = std::move(body);
        cur = keep.get();
        continue;
      }
      return apply_at(fn, arg, mode, x.pos);
    }
    if (const auto* let = std::get_if<ast::Let>(&x.node)) {
      local = local.extend(let->name, eval(*let->bound, local, mode));
      cur = let->body.get();
      continue;
    }
    if (const auto* branch = std::get_if<ast::If>(&x.node)) {
      Value c = eval(*branch->cond, local, mode);
      if (!c.is_numeric()) {
        throw EvalError("if: condition must be a number, got " + std::string(kind_name(c)), x.pos);
      }
      cur = primal_most(c) != 0.0 ? branch->then_branch.get() : branch->else_branch.get();
      continue;
    }
    if (const auto* p = std::get_if<ast::Prim>(&x.node)) return primitive_value(p->op);
    if (const auto* p = std::get_if<ast::PairCons>(&x.node)) {
      Value a = eval(*p->first, local, mode);
      return Value::pair(std::move(a), eval(*p->second, local, mode));
    }
    if (const auto* f = std::get_if<ast::Fst>(&x.node)) {
      Value v = eval(*f->pair, local, mode);
      if (const auto* p = v.get_if<Pair>()) return p->first;
      throw EvalError("fst: expected a pair, got " + std::string(kind_name(v)), x.pos);
    }
    if (const auto* s = std::get_if<ast::Snd>(&x.node)) {
      Value v = eval(*s->pair, local, mode);
      if (const auto* p = v.get_if<Pair>()) return p->second;
      throw EvalError("snd: expected a pair, got " + std::string(kind_name(v)), x.pos);
    }
    if (std::holds_alternative<ast::DOp>(x.node)) return primitive_value(PrimOp::Derivative);
    if (std::holds_alternative<ast::TangentOp>(x.node)) return primitive_value(PrimOp::Tangent);
    if (std::holds_alternative<ast::SwizzleOp>(x.node)) return primitive_value(PrimOp::Swizzle);
    if (const auto* p = std::get_if<ast::Project>(&x.node)) {
      Value v = eval(*p->body, local, mode);
      return p->part == ast::Project::Part::Tangent ? tangent(p->tag, v, mode)
                                                    : primal(p->tag, v, mode);
    }
    throw EvalError("unhandled expression", x.pos);
  }
}

Value run_program(std::string_view source, Mode mode, ParseOptions options) {
  ExprPtr program = parse(source, options);
  return eval(*program, Env{}, mode);
}

}  // namespace tagad
