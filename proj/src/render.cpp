#include "tagad/render.hpp"

#include <array>
#include <charconv>

namespace tagad {

std::string render_real(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string render(const Value& v) {
  if (const auto* r = v.get_if<Real>()) return render_real(r->value);
  if (const auto* d = v.get_if<Dual>()) {
    return "(dual " + to_string(d->tag) + " " + render(d->primal) + " " + render(d->tangent) + ")";
  }
  if (const auto* p = v.get_if<Pair>()) {
    return "(" + render(p->first) + " . " + render(p->second) + ")";
  }
  if (v.is<Nil>()) return "()";
  if (const auto* p = v.get_if<Primitive>()) return "#<primitive " + std::string(prim_info(p->op).name) + ">";
  if (const auto* p = v.get_if<PartialPrimitive>()) {
    return "#<primitive " + std::string(prim_info(p->op).name) + ">";
  }
  if (const auto* t = v.get_if<TagRef>()) return "#<tag " + to_string(t->tag) + ">";
  return "#<closure>";
}

}  // namespace tagad
