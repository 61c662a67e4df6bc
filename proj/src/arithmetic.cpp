#include "tagad/arithmetic.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "tagad/error.hpp"

namespace tagad {

namespace {

std::string number_text(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

double real_add(double a, double b) { return a + b; }
double real_sub(double a, double b) { return a - b; }
double real_mul(double a, double b) { return a * b; }
double real_div(double a, double b) {
  if (b == 0.0) throw EvalError("/: division by zero (dividend primal " + number_text(a) + ")");
  return a / b;
}
double real_neg(double a) { return -a; }
double real_sin(double a) { return std::sin(a); }
double real_cos(double a) { return std::cos(a); }
double real_exp(double a) { return std::exp(a); }
double real_log(double a) {
  if (!(a > 0.0)) throw EvalError("log: argument must be positive, got primal " + number_text(a));
  return std::log(a);
}
double real_sqrt(double a) {
  if (a < 0.0) throw EvalError("sqrt: argument must be non-negative, got primal " + number_text(a));
  return std::sqrt(a);
}

Value one(const Value&, const Value&) { return Value::real(1.0); }
Value minus_one(const Value&, const Value&) { return Value::real(-1.0); }
Value second_arg(const Value&, const Value& y) { return y; }
Value first_arg(const Value& x, const Value&) { return x; }
Value reciprocal_of_second(const Value&, const Value& y) { return div(Value::real(1.0), y); }
Value quotient_partial(const Value& x, const Value& y) { return neg(div(x, mul(y, y))); }
Value sin_partial(const Value& x, const Value&) { return cos(x); }
Value cos_partial(const Value& x, const Value&) { return neg(sin(x)); }
Value exp_partial(const Value& x, const Value&) { return exp(x); }
Value log_partial(const Value& x, const Value&) { return div(Value::real(1.0), x); }
Value sqrt_partial(const Value& x, const Value&) { return div(Value::real(0.5), sqrt(x)); }

const std::array<PrimitiveRule, 10> rules{{
    {PrimOp::Add, "+", 2, nullptr, real_add, one, one},
    {PrimOp::Sub, "-", 2, nullptr, real_sub, one, minus_one},
    {PrimOp::Mul, "*", 2, nullptr, real_mul, second_arg, first_arg},
    {PrimOp::Div, "/", 2, nullptr, real_div, reciprocal_of_second, quotient_partial},
    {PrimOp::Neg, "neg", 1, real_neg, nullptr, minus_one, nullptr},
    {PrimOp::Sin, "sin", 1, real_sin, nullptr, sin_partial, nullptr},
    {PrimOp::Cos, "cos", 1, real_cos, nullptr, cos_partial, nullptr},
    {PrimOp::Exp, "exp", 1, real_exp, nullptr, exp_partial, nullptr},
    {PrimOp::Log, "log", 1, real_log, nullptr, log_partial, nullptr},
    {PrimOp::Sqrt, "sqrt", 1, real_sqrt, nullptr, sqrt_partial, nullptr},
}};

void require_numeric(std::string_view who, const Value& v) {
  if (!v.is_numeric()) {
    throw EvalError(std::string(who) + ": expected a number, got " + std::string(kind_name(v)));
  }
}

// g·d, skipping the multiplication when d is ±1.
Value scale(const Value& g, const Value& d) {
  if (const auto* r = d.get_if<Real>()) {
    if (r->value == 1.0) return g;
    if (r->value == -1.0) return neg(g);
  }
  return mul(g, d);
}

void collect_spine_violations(const Value& v, std::vector<Tag>& spine, bool& ok) {
  if (!ok) return;
  if (v.is<Real>()) return;
  const auto* d = v.get_if<Dual>();
  if (!d) {
    ok = false;
    return;
  }
  for (Tag t : spine) {
    if (t == d->tag) {
      ok = false;
      return;
    }
  }
  spine.push_back(d->tag);
  collect_spine_violations(d->primal, spine, ok);
  collect_spine_violations(d->tangent, spine, ok);
  spine.pop_back();
}

}  // namespace

const PrimitiveRule* rule_for(PrimOp op) {
  for (const auto& r : rules) {
    if (r.op == op) return &r;
  }
  return nullptr;
}

Value bundle(Value primal, Value tangent, Tag tag) {
  require_numeric("bundle", primal);
  require_numeric("bundle", tangent);
  if (contains_tag(primal, tag) || contains_tag(tangent, tag)) {
    throw EvalError("bundle: " + to_string(tag) + " already present in the bundled parts");
  }
  return Value::dual(tag, std::move(primal), std::move(tangent));
}

Value apply_unary(const PrimitiveRule& rule, const Value& x) {
  if (const auto* r = x.get_if<Real>()) return Value::real(rule.unary(r->value));
  if (const auto* d = x.get_if<Dual>()) {
    // primal first, so domain errors come from the rule itself
    Value p = apply_unary(rule, d->primal);
    return Value::dual(d->tag, std::move(p), scale(d->tangent, rule.partial_first(d->primal, d->primal)));
  }
  require_numeric(rule.name, x);
  return x;
}

Value apply_binary(const PrimitiveRule& rule, const Value& x, const Value& y) {
  require_numeric(rule.name, x);
  require_numeric(rule.name, y);
  const auto* rx = x.get_if<Real>();
  const auto* ry = y.get_if<Real>();
  if (rx && ry) return Value::real(rule.binary(rx->value, ry->value));

  auto tx = youngest_tag(x);
  auto ty = youngest_tag(y);
  Tag tag = !tx ? *ty : !ty ? *tx : std::max(*tx, *ty);

  auto [px, gx] = split_by_tag(x, tag);
  auto [py, gy] = split_by_tag(y, tag);
  Value primal = apply_binary(rule, px, py);
  std::optional<Value> tangent;
  if (gx) tangent = scale(*gx, rule.partial_first(px, py));
  if (gy) {
    Value term = scale(*gy, rule.partial_second(px, py));
    tangent = tangent ? add(*tangent, term) : term;
  }
  return Value::dual(tag, std::move(primal), std::move(*tangent));
}

Value add(const Value& x, const Value& y) { return apply_binary(*rule_for(PrimOp::Add), x, y); }
Value sub(const Value& x, const Value& y) { return apply_binary(*rule_for(PrimOp::Sub), x, y); }
Value mul(const Value& x, const Value& y) { return apply_binary(*rule_for(PrimOp::Mul), x, y); }
Value div(const Value& x, const Value& y) { return apply_binary(*rule_for(PrimOp::Div), x, y); }
Value neg(const Value& x) { return apply_unary(*rule_for(PrimOp::Neg), x); }
Value sin(const Value& x) { return apply_unary(*rule_for(PrimOp::Sin), x); }
Value cos(const Value& x) { return apply_unary(*rule_for(PrimOp::Cos), x); }
Value exp(const Value& x) { return apply_unary(*rule_for(PrimOp::Exp), x); }
Value log(const Value& x) { return apply_unary(*rule_for(PrimOp::Log), x); }
Value sqrt(const Value& x) { return apply_unary(*rule_for(PrimOp::Sqrt), x); }

Value compare(PrimOp op, const Value& x, const Value& y) {
  std::string_view name = prim_info(op).name;
  require_numeric(name, x);
  require_numeric(name, y);
  double a = primal_most(x);
  double b = primal_most(y);
  bool result = false;
  switch (op) {
    case PrimOp::Less: result = a < b; break;
    case PrimOp::Equal: result = a == b; break;
    case PrimOp::Greater: result = a > b; break;
    default: throw EvalError(std::string(name) + ": not a comparison");
  }
  return Value::real(result ? 1.0 : 0.0);
}

double primal_most(const Value& v) {
  const Value* cur = &v;
  while (const auto* d = cur->get_if<Dual>()) cur = &d->primal;
  if (const auto* r = cur->get_if<Real>()) return r->value;
  throw EvalError("expected a number, got " + std::string(kind_name(*cur)));
}

bool contains_tag(const Value& v, Tag tag) {
  const auto* d = v.get_if<Dual>();
  if (!d) return false;
  return d->tag == tag || contains_tag(d->primal, tag) || contains_tag(d->tangent, tag);
}

std::optional<Tag> youngest_tag(const Value& v) {
  const auto* d = v.get_if<Dual>();
  if (!d) return std::nullopt;
  Tag best = d->tag;
  if (auto p = youngest_tag(d->primal)) best = std::max(best, *p);
  if (auto g = youngest_tag(d->tangent)) best = std::max(best, *g);
  return best;
}

std::pair<Value, std::optional<Value>> split_by_tag(const Value& v, Tag tag) {
  const auto* d = v.get_if<Dual>();
  if (!d || !contains_tag(v, tag)) return {v, std::nullopt};
  if (d->tag == tag) return {d->primal, d->tangent};
  // tag sits below a foreign tag: distribute over both coefficients.
  auto [pp, pg] = split_by_tag(d->primal, tag);
  auto [gp, gg] = split_by_tag(d->tangent, tag);
  Value zero = Value::real(0.0);
  return {Value::dual(d->tag, pp, gp), Value::dual(d->tag, pg.value_or(zero), gg.value_or(zero))};
}

bool well_formed(const Value& v) {
  std::vector<Tag> spine;
  bool ok = true;
  collect_spine_violations(v, spine, ok);
  return ok;
}

}  // namespace tagad
