#include "tagad/value.hpp"

#include "tagad/expr.hpp"

namespace tagad {

struct Env::Frame {
  std::string name;
  Value value;
  std::shared_ptr<const Frame> parent;
};

namespace {

const std::shared_ptr<const ValueNode>& nil_node() {
  static const auto node = std::make_shared<const ValueNode>(Nil{});
  return node;
}

}  // namespace

Value::Value() : node_(nil_node()) {}

Value Value::real(double v) { return Value(std::make_shared<const ValueNode>(Real{v})); }

Value Value::dual(Tag tag, Value primal, Value tangent) {
  return Value(std::make_shared<const ValueNode>(Dual{tag, std::move(primal), std::move(tangent)}));
}

Value Value::pair(Value first, Value second) {
  return Value(std::make_shared<const ValueNode>(Pair{std::move(first), std::move(second)}));
}

Value Value::nil() { return Value(); }

Value Value::closure(std::string param, ExprPtr body, Env env) {
  return Value(std::make_shared<const ValueNode>(
      Closure{std::move(param), std::move(body), std::move(env)}));
}

Value Value::primitive(PrimOp op) { return Value(std::make_shared<const ValueNode>(Primitive{op})); }

Value Value::partial(PrimOp op, std::vector<Value> args) {
  return Value(std::make_shared<const ValueNode>(PartialPrimitive{op, std::move(args)}));
}

Value Value::wrapper(std::string kind, std::function<Value(const Value&)> fn) {
  return Value(std::make_shared<const ValueNode>(Wrapper{std::move(kind), std::move(fn)}));
}

Value Value::tag_ref(Tag t) { return Value(std::make_shared<const ValueNode>(TagRef{t})); }

bool Value::is_numeric() const { return is<Real>() || is<Dual>(); }

bool Value::is_function() const {
  return is<Closure>() || is<Primitive>() || is<PartialPrimitive>() || is<Wrapper>();
}

Env Env::extend(std::string name, Value v) const {
  return Env(std::make_shared<const Frame>(Frame{std::move(name), std::move(v), head_}));
}

const Value* Env::lookup(std::string_view name) const {
  for (const Frame* f = head_.get(); f != nullptr; f = f->parent.get()) {
    if (f->name == name) return &f->value;
  }
  return nullptr;
}

std::string_view kind_name(const Value& v) {
  struct Visitor {
    std::string_view operator()(const Real&) const { return "real"; }
    std::string_view operator()(const Dual&) const { return "dual"; }
    std::string_view operator()(const Pair&) const { return "pair"; }
    std::string_view operator()(const Nil&) const { return "nil"; }
    std::string_view operator()(const Closure&) const { return "closure"; }
    std::string_view operator()(const Primitive&) const { return "primitive"; }
    std::string_view operator()(const PartialPrimitive&) const { return "primitive"; }
    std::string_view operator()(const Wrapper&) const { return "closure"; }
    std::string_view operator()(const TagRef&) const { return "tag"; }
  };
  return std::visit(Visitor{}, static_cast<const ValueNode::variant&>(v.node()));
}

bool structurally_equal(const Value& a, const Value& b) {
  if (a.same_as(b)) return true;
  if (const auto* x = a.get_if<Real>()) {
    const auto* y = b.get_if<Real>();
    return y && x->value == y->value;
  }
  if (const auto* x = a.get_if<Dual>()) {
    const auto* y = b.get_if<Dual>();
    return y && x->tag == y->tag && structurally_equal(x->primal, y->primal) &&
           structurally_equal(x->tangent, y->tangent);
  }
  if (const auto* x = a.get_if<Pair>()) {
    const auto* y = b.get_if<Pair>();
    return y && structurally_equal(x->first, y->first) && structurally_equal(x->second, y->second);
  }
  if (a.is<Nil>()) return b.is<Nil>();
  if (const auto* x = a.get_if<TagRef>()) {
    const auto* y = b.get_if<TagRef>();
    return y && x->tag == y->tag;
  }
  return false;
}

}  // namespace tagad
