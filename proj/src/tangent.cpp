#include "tagad/tangent.hpp"

#include "tagad/arithmetic.hpp"
#include "tagad/error.hpp"
#include "tagad/eval.hpp"
#include "tagad/expr.hpp"

namespace tagad {

namespace {

using Part = ast::Project::Part;

Value project(Tag tag, Part part, const Value& v, Mode mode);

// λy. project(tag, f y)
Value opaque_projection(Tag tag, Part part, Value f, Mode mode) {
  return Value::wrapper(part == Part::Tangent ? "tangent" : "primal",
                        [tag, part, f = std::move(f), mode](const Value& y) {
                          return project(tag, part, apply(f, y, mode), mode);
                        });
}

// λy. swizzle(ε', tag, project(tag, f (swizzle(tag, ε', y)))) with ε' fresh per call.
Value guarded_projection(Tag tag, Part part, Value f, Mode mode) {
  return Value::wrapper(part == Part::Tangent ? "guarded-tangent" : "guarded-primal",
                        [tag, part, f = std::move(f), mode](const Value& y) {
                          Tag shelter = fresh_tag();
                          Value result = apply(f, swizzle(tag, shelter, y, mode), mode);
                          return swizzle(shelter, tag, project(tag, part, result, mode), mode);
                        });
}

Value project_function(Tag tag, Part part, const Value& f, Mode mode) {
  switch (mode) {
    case Mode::NaivePostcompose:
      if (const auto* c = f.get_if<Closure>()) {
        return Value::closure(c->param, make_expr(ast::Project{tag, part, c->body}, c->body->pos),
                              c->env);
      }
      return opaque_projection(tag, part, f, mode);
    case Mode::NaiveOpaque: return opaque_projection(tag, part, f, mode);
    case Mode::Guarded: return guarded_projection(tag, part, f, mode);
  }
  throw EvalError("unknown mode");
}

Value project(Tag tag, Part part, const Value& v, Mode mode) {
  if (v.is<Real>()) return part == Part::Tangent ? Value::real(0.0) : v;
  if (const auto* d = v.get_if<Dual>()) {
    if (d->tag == tag) return part == Part::Tangent ? d->tangent : d->primal;
    return Value::dual(d->tag, project(tag, part, d->primal, mode),
                       project(tag, part, d->tangent, mode));
  }
  if (const auto* p = v.get_if<Pair>()) {
    return Value::pair(project(tag, part, p->first, mode), project(tag, part, p->second, mode));
  }
  if (v.is_function()) return project_function(tag, part, v, mode);
  // nil and tag references carry no perturbation
  return v;
}

}  // namespace

Value tangent(Tag tag, const Value& v, Mode mode) { return project(tag, Part::Tangent, v, mode); }

Value primal(Tag tag, const Value& v, Mode mode) { return project(tag, Part::Primal, v, mode); }

Value swizzle(Tag from, Tag to, const Value& v, Mode mode) {
  if (from == to) throw EvalError("swizzle: source and target tag are both " + to_string(from));
  if (const auto* d = v.get_if<Dual>()) {
    Tag t = d->tag == from ? to : d->tag == to ? from : d->tag;
    return Value::dual(t, swizzle(from, to, d->primal, mode), swizzle(from, to, d->tangent, mode));
  }
  if (const auto* p = v.get_if<Pair>()) {
    return Value::pair(swizzle(from, to, p->first, mode), swizzle(from, to, p->second, mode));
  }
  if (v.is_function()) {
    // The exchange is its own inverse, so pre- and post-composition use the same map.
    return Value::wrapper("swizzle", [from, to, v, mode](const Value& y) {
      return swizzle(from, to, apply(v, swizzle(from, to, y, mode), mode), mode);
    });
  }
  return v;
}

Value derivative(const Value& f, const Value& x, Mode mode) {
  if (!f.is_function()) {
    throw EvalError("D: expected a function, got " + std::string(kind_name(f)));
  }
  Tag tag = fresh_tag();
  return tangent(tag, apply(f, bundle(x, Value::real(1.0), tag), mode), mode);
}

}  // namespace tagad
