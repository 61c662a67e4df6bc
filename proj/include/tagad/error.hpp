#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace tagad {

struct SourcePos {
  int line = 0;
  int column = 0;
};

inline std::string to_string(SourcePos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

/// Malformed program text. Always carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourcePos pos)
      : std::runtime_error(to_string(pos) + ": syntax error: " + message),
        message_(message),
        pos_(pos) {}

  const std::string& message() const { return message_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string message_;
  SourcePos pos_;
};

/// Runtime failure: unbound names, bad applications, numeric domain errors.
/// Errors raised below the evaluator start without a position; the evaluator
/// attaches the innermost application site on the way out.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& message, std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(format(message, pos)), message_(message), pos_(pos) {}

  const std::string& message() const { return message_; }
  const std::optional<SourcePos>& pos() const { return pos_; }

  EvalError at(SourcePos p) const { return pos_ ? *this : EvalError(message_, p); }

 private:
  static std::string format(const std::string& m, const std::optional<SourcePos>& p) {
    return p ? to_string(*p) + ": error: " + m : "error: " + m;
  }

  std::string message_;
  std::optional<SourcePos> pos_;
};

}  // namespace tagad
