#include "tagad/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace tagad {

namespace {

struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  SourcePos pos;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexp read_program() {
    skip_space();
    if (at_end()) throw ParseError("empty program", here());
    Sexp s = read();
    skip_space();
    if (!at_end()) throw ParseError("unexpected text after the program expression", here());
    return s;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  SourcePos here() const { return {line_, column_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end()) {
      char c = text_[i_];
      if (c == ';') {
        while (!at_end() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Sexp read() {
    SourcePos start = here();
    char c = text_[i_];
    if (c == ')') throw ParseError("unbalanced ')'", start);
    if (c == '(') {
      advance();
      Sexp list{true, {}, {}, start};
      while (true) {
        skip_space();
        if (at_end()) throw ParseError("unbalanced '(' opened here", start);
        if (text_[i_] == ')') {
          advance();
          return list;
        }
        list.items.push_back(read());
      }
    }
    std::size_t begin = i_;
    while (!at_end()) {
      char d = text_[i_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      advance();
    }
    return Sexp{false, std::string(text_.substr(begin, i_ - begin)), {}, start};
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_keyword(std::string_view s) { return s == "lambda" || s == "let" || s == "if"; }

std::optional<double> as_number(const std::string& atom) {
  double v = 0;
  const char* first = atom.data();
  const char* last = atom.data() + atom.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

class Converter {
 public:
  explicit Converter(ParseOptions options) : options_(options) {}

  ExprPtr convert(const Sexp& s) {
    if (!s.is_list) return convert_atom(s);
    if (s.items.empty()) throw ParseError("empty application", s.pos);
    const Sexp& head = s.items.front();
    if (!head.is_list) {
      if (head.atom == "lambda") return convert_lambda(s);
      if (head.atom == "let") return convert_let(s);
      if (head.atom == "if") {
        expect_size(s, 4, "if takes a condition and two branches");
        return make_expr(ast::If{convert(s.items[1]), convert(s.items[2]), convert(s.items[3])},
                         s.pos);
      }
      if (!bound(head.atom)) {
        if (head.atom == "cons") {
          expect_size(s, 3, "cons takes two arguments");
          return make_expr(ast::PairCons{convert(s.items[1]), convert(s.items[2])}, s.pos);
        }
        if (head.atom == "fst") {
          expect_size(s, 2, "fst takes one argument");
          return make_expr(ast::Fst{convert(s.items[1])}, s.pos);
        }
        if (head.atom == "snd") {
          expect_size(s, 2, "snd takes one argument");
          return make_expr(ast::Snd{convert(s.items[1])}, s.pos);
        }
      }
    }
    if (s.items.size() < 2) throw ParseError("application needs at least one argument", s.pos);
    ExprPtr e = convert(head);
    for (std::size_t k = 1; k < s.items.size(); ++k) {
      e = make_expr(ast::App{e, convert(s.items[k])}, s.pos);
    }
    return e;
  }

 private:
  bool bound(const std::string& name) const {
    return std::find(scope_.begin(), scope_.end(), name) != scope_.end();
  }

  static void expect_size(const Sexp& s, std::size_t n, const char* message) {
    if (s.items.size() != n) throw ParseError(message, s.pos);
  }

  std::string binder_name(const Sexp& s, const char* form) const {
    if (s.is_list || as_number(s.atom) || is_keyword(s.atom)) {
      throw ParseError(std::string("expected a variable name in ") + form, s.pos);
    }
    return s.atom;
  }

  ExprPtr convert_atom(const Sexp& s) {
    if (auto v = as_number(s.atom)) return make_expr(ast::Lit{*v}, s.pos);
    if (is_keyword(s.atom)) throw ParseError("'" + s.atom + "' cannot be used as a value", s.pos);
    if (bound(s.atom)) return make_expr(ast::Var{s.atom}, s.pos);
    if (s.atom == "D") return make_expr(ast::DOp{}, s.pos);
    if (options_.expose_internals) {
      if (s.atom == "tangent") return make_expr(ast::TangentOp{}, s.pos);
      if (s.atom == "swizzle") return make_expr(ast::SwizzleOp{}, s.pos);
    }
    if (auto op = prim_by_name(s.atom)) {
      if (!prim_info(*op).internal || options_.expose_internals) {
        return make_expr(ast::Prim{*op}, s.pos);
      }
    }
    return make_expr(ast::Var{s.atom}, s.pos);
  }

  ExprPtr convert_lambda(const Sexp& s) {
    if (s.items.size() != 3 || !s.items[1].is_list || s.items[1].items.empty()) {
      throw ParseError("lambda takes a non-empty parameter list and one body", s.pos);
    }
    std::vector<std::string> params;
    for (const auto& p : s.items[1].items) params.push_back(binder_name(p, "lambda parameters"));
    scope_.insert(scope_.end(), params.begin(), params.end());
    ExprPtr body = convert(s.items[2]);
    scope_.resize(scope_.size() - params.size());
    for (auto it = params.rbegin(); it != params.rend(); ++it) {
      body = make_expr(ast::Lam{*it, body}, s.pos);
    }
    return body;
  }

  ExprPtr convert_let(const Sexp& s) {
    if (s.items.size() != 3 || !s.items[1].is_list) {
      throw ParseError("let takes a binding list and one body", s.pos);
    }
    struct Binding {
      std::string name;
      ExprPtr bound;
      SourcePos pos;
    };
    std::vector<Binding> bindings;
    for (const auto& b : s.items[1].items) {
      if (!b.is_list || b.items.size() != 2) {
        throw ParseError("let binding must have the form (name expression)", b.pos);
      }
      std::string name = binder_name(b.items[0], "let binding");
      ExprPtr value = convert(b.items[1]);
      scope_.push_back(name);
      bindings.push_back({std::move(name), std::move(value), b.pos});
    }
    ExprPtr body = convert(s.items[2]);
    scope_.resize(scope_.size() - bindings.size());
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) {
      body = make_expr(ast::Let{it->name, it->bound, body}, it->pos);
    }
    return body;
  }

  ParseOptions options_;
  std::vector<std::string> scope_;
};

}  // namespace

ExprPtr parse(std::string_view text, ParseOptions options) {
  Sexp program = Reader(text).read_program();
  return Converter(options).convert(program);
}

}  // namespace tagad
