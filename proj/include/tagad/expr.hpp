#pragma once

#include <memory>
#include <string>
#include <variant>

#include "tagad/error.hpp"
#include "tagad/primitive.hpp"
#include "tagad/tag.hpp"

namespace tagad {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace ast {

struct Var {
  std::string name;
};
struct Lam {
  std::string param;
  ExprPtr body;
};
struct App {
  ExprPtr fn;
  ExprPtr arg;
};
struct Lit {
  double value;
};
struct Let {
  std::string name;
  ExprPtr bound;
  ExprPtr body;
};
struct If {
  ExprPtr cond;
  ExprPtr then_branch;
  ExprPtr else_branch;
};
struct Prim {
  PrimOp op;
};
struct PairCons {
  ExprPtr first;
  ExprPtr second;
};
struct Fst {
  ExprPtr pair;
};
struct Snd {
  ExprPtr pair;
};
struct DOp {};
struct TangentOp {};
struct SwizzleOp {};

/// Never produced by the parser: the body of a closure whose tangent (or
/// primal) was taken by rewriting under the binder.
struct Project {
  enum class Part { Primal, Tangent };
  Tag tag;
  Part part;
  ExprPtr body;
};

}  // namespace ast

struct Expr {
  using Node = std::variant<ast::Var, ast::Lam, ast::App, ast::Lit, ast::Let, ast::If, ast::Prim,
                            ast::PairCons, ast::Fst, ast::Snd, ast::DOp, ast::TangentOp,
                            ast::SwizzleOp, ast::Project>;

  Node node;
  SourcePos pos;
};

template <typename T>
ExprPtr make_expr(T node, SourcePos pos = {}) {
  return std::make_shared<const Expr>(Expr{Expr::Node(std::move(node)), pos});
}

/// S-expression rendering of an AST; used by tests and diagnostics.
std::string to_sexp(const Expr& e);

}  // namespace tagad
