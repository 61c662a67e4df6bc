#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tagad/primitive.hpp"
#include "tagad/tag.hpp"

namespace tagad {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ValueNode;

/// Immutable runtime value. Copies share structure.
class Value {
 public:
  /// Nil.
  Value();

  static Value real(double v);
  /// Raw Dual constructor; performs no checks. Use bundle() for validated construction.
  static Value dual(Tag tag, Value primal, Value tangent);
  static Value pair(Value first, Value second);
  static Value nil();
  static Value closure(std::string param, ExprPtr body, class Env env);
  static Value primitive(PrimOp op);
  static Value partial(PrimOp op, std::vector<Value> args);
  static Value wrapper(std::string kind, std::function<Value(const Value&)> fn);
  static Value tag_ref(Tag t);

  const ValueNode& node() const { return *node_; }

  template <typename T>
  const T* get_if() const;

  template <typename T>
  bool is() const {
    return get_if<T>() != nullptr;
  }

  /// Real or Dual.
  bool is_numeric() const;
  /// Closure, primitive, partial primitive or host wrapper.
  bool is_function() const;

  /// Same node object; cheap identity test.
  bool same_as(const Value& other) const { return node_ == other.node_; }

 private:
  explicit Value(std::shared_ptr<const ValueNode> n) : node_(std::move(n)) {}

  std::shared_ptr<const ValueNode> node_;
};

/// Immutable lexical environment; extending never touches existing frames.
class Env {
 public:
  Env() = default;

  Env extend(std::string name, Value v) const;
  const Value* lookup(std::string_view name) const;

 private:
  struct Frame;
  explicit Env(std::shared_ptr<const Frame> head) : head_(std::move(head)) {}

  std::shared_ptr<const Frame> head_;
};

struct Real {
  double value;
};

/// primal + tangent·ε_tag
struct Dual {
  Tag tag;
  Value primal;
  Value tangent;
};

struct Pair {
  Value first;
  Value second;
};

struct Nil {};

struct Closure {
  std::string param;
  ExprPtr body;
  Env env;
};

struct Primitive {
  PrimOp op;
};

/// A curried primitive that has received some, but not all, of its arguments.
struct PartialPrimitive {
  PrimOp op;
  std::vector<Value> args;
};

/// Opaque host-side function. Tangent and swizzle wrappers are built from these.
struct Wrapper {
  std::string kind;
  std::function<Value(const Value&)> fn;
};

/// A tag as a first-class value; only reachable through internal primitives.
struct TagRef {
  Tag tag;
};

struct ValueNode : std::variant<Real, Dual, Pair, Nil, Closure, Primitive, PartialPrimitive,
                                Wrapper, TagRef> {
  using variant::variant;
};

template <typename T>
const T* Value::get_if() const {
  return std::get_if<T>(static_cast<const ValueNode::variant*>(node_.get()));
}

/// Name of the value's shape, for diagnostics.
std::string_view kind_name(const Value& v);

/// Exact structural equality of numeric trees, pairs and nil; functions compare by identity.
bool structurally_equal(const Value& a, const Value& b);

}  // namespace tagad
