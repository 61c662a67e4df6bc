#include "tagad/expr.hpp"

#include "tagad/render.hpp"

namespace tagad {

namespace {

struct SexpPrinter {
  std::string operator()(const ast::Var& v) const { return v.name; }
  std::string operator()(const ast::Lam& l) const {
    return "(lambda (" + l.param + ") " + to_sexp(*l.body) + ")";
  }
  std::string operator()(const ast::App& a) const {
    return "(" + to_sexp(*a.fn) + " " + to_sexp(*a.arg) + ")";
  }
  std::string operator()(const ast::Lit& l) const { return render_real(l.value); }
  std::string operator()(const ast::Let& l) const {
    return "(let ((" + l.name + " " + to_sexp(*l.bound) + ")) " + to_sexp(*l.body) + ")";
  }
  std::string operator()(const ast::If& i) const {
    return "(if " + to_sexp(*i.cond) + " " + to_sexp(*i.then_branch) + " " +
           to_sexp(*i.else_branch) + ")";
  }
  std::string operator()(const ast::Prim& p) const { return std::string(prim_info(p.op).name); }
  std::string operator()(const ast::PairCons& p) const {
    return "(cons " + to_sexp(*p.first) + " " + to_sexp(*p.second) + ")";
  }
  std::string operator()(const ast::Fst& f) const { return "(fst " + to_sexp(*f.pair) + ")"; }
  std::string operator()(const ast::Snd& s) const { return "(snd " + to_sexp(*s.pair) + ")"; }
  std::string operator()(const ast::DOp&) const { return "D"; }
  std::string operator()(const ast::TangentOp&) const { return "tangent"; }
  std::string operator()(const ast::SwizzleOp&) const { return "swizzle"; }
  std::string operator()(const ast::Project& p) const {
    const char* head = p.part == ast::Project::Part::Tangent ? "%tangent " : "%primal ";
    return "(" + std::string(head) + to_string(p.tag) + " " + to_sexp(*p.body) + ")";
  }
};

}  // namespace

std::string to_sexp(const Expr& e) { return std::visit(SexpPrinter{}, e.node); }

}  // namespace tagad
