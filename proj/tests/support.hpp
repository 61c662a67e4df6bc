#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oracle/finite_difference.hpp"
#include "oracle/poly_dual.hpp"
#include "tagad/arithmetic.hpp"
#include "tagad/eval.hpp"
#include "tagad/tangent.hpp"

namespace tagad::testing {

inline double as_real(const Value& v) {
  if (const auto* r = v.get_if<Real>()) return r->value;
  throw std::runtime_error("expected a real, got " + std::string(kind_name(v)));
}

inline Value program_value(const std::string& source, Mode mode = Mode::Guarded) {
  return run_program(source, mode);
}

/// Wraps an engine function value as a plain real function for the finite-difference oracle.
inline oracle::RealFunction as_real_function(Value f, Mode mode = Mode::Guarded) {
  return [f = std::move(f), mode](double x) { return as_real(apply(f, Value::real(x), mode)); };
}

/// |a - b| <= tol * max(1, |reference|)
inline bool close(double a, double reference, double tol) {
  return std::abs(a - reference) <= tol * std::max(1.0, std::abs(reference));
}

inline bool poly_close(const oracle::PolyDual& a, const oracle::PolyDual& reference, double tol) {
  double scale = std::max(1.0, reference.norm());
  for (unsigned s = 0; s < oracle::PolyDual::terms; ++s) {
    if (std::abs(a[s] - reference[s]) > tol * scale) return false;
  }
  return true;
}

/// Smooth single-variable functions used to check D against finite differences.
inline const std::vector<std::string>& smooth_suite() {
  static const std::vector<std::string> suite{
      "(lambda (x) (* x x))",
      "(lambda (x) (- (* x (* x x)) (* 2 x)))",
      "(lambda (x) (* (sin x) (exp x)))",
      "(lambda (x) (/ 1 (+ 1 (* x x))))",
      "(lambda (x) (exp (sin x)))",
      "(lambda (x) (log (+ 1 (* x x))))",
      "(lambda (x) (sqrt (+ 1 (* x x))))",
      "(lambda (x) (* x (cos x)))",
      "(lambda (x) (/ (+ x 1) (+ x 3)))",
      "(lambda (x) (- (* (* x x) (* x x)) x))",
  };
  return suite;
}

inline const std::vector<double>& smooth_points() {
  static const std::vector<double> points{-1.5, -0.5, 0.3, 1.0, 2.0};
  return points;
}

/// Random well-formed numeric value. Each Dual uses one of `tags` not
/// already on its spine; when `canonical` is set, inner tags are strictly
/// older than outer ones. Coefficients are integers in [-4, 4] when
/// `integral`, otherwise uniform in [lo, hi].
class ValueGenerator {
 public:
  ValueGenerator(std::uint64_t seed, std::vector<Tag> tags) : rng_(seed), tags_(std::move(tags)) {
    std::sort(tags_.begin(), tags_.end());
  }

  bool integral = false;
  bool canonical = true;
  double lo = -2.0;
  double hi = 2.0;

  Value operator()() { return generate(tags_); }

  double coefficient() {
    if (integral) return static_cast<double>(std::uniform_int_distribution<int>(-4, 4)(rng_));
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  Value generate(const std::vector<Tag>& available) {
    if (available.empty() || std::bernoulli_distribution(0.25)(rng_)) {
      return Value::real(coefficient());
    }
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, available.size() - 1)(rng_);
    Tag tag = available[pick];
    std::vector<Tag> rest;
    for (std::size_t k = 0; k < available.size(); ++k) {
      if (k == pick) continue;
      if (canonical && !(available[k] < tag)) continue;
      rest.push_back(available[k]);
    }
    Value p = generate(rest);
    Value g = generate(rest);
    return Value::dual(tag, p, g);
  }

  std::mt19937_64 rng_;
  std::vector<Tag> tags_;
};

/// A random arithmetic expression evaluated twice: by the engine on Values
/// and by the oracle on PolyDuals.
struct ArithmeticCase {
  Value engine;
  oracle::PolyDual reference;
  int operations = 0;
};

namespace detail {

inline ArithmeticCase random_arithmetic(ValueGenerator& gen, const oracle::TagMap& tags, int& budget,
                                        bool transcendental) {
  auto& rng = gen.rng();
  if (budget <= 0 || std::bernoulli_distribution(0.3)(rng)) {
    Value leaf = gen();
    return {leaf, oracle::value_to_poly(leaf, tags), 0};
  }
  --budget;
  static const std::vector<PrimOp> ring_ops{PrimOp::Add, PrimOp::Sub, PrimOp::Mul, PrimOp::Neg};
  static const std::vector<PrimOp> all_ops{PrimOp::Add, PrimOp::Sub, PrimOp::Mul, PrimOp::Div,
                                           PrimOp::Neg, PrimOp::Sin, PrimOp::Cos, PrimOp::Exp,
                                           PrimOp::Log, PrimOp::Sqrt};
  const auto& ops = transcendental ? all_ops : ring_ops;
  PrimOp op = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
  const PrimitiveRule& rule = *rule_for(op);

  ArithmeticCase a = random_arithmetic(gen, tags, budget, transcendental);
  if (rule.arity == 1) {
    double s = a.reference.scalar();
    bool in_domain = true;
    if (op == PrimOp::Log || op == PrimOp::Sqrt) in_domain = s > 0.25;
    if (op == PrimOp::Exp) in_domain = std::abs(s) < 3;
    if (!in_domain) op = PrimOp::Sin;
    const PrimitiveRule& used = *rule_for(op);
    return {apply_unary(used, a.engine), oracle::poly_op(op, a.reference), a.operations + 1};
  }
  ArithmeticCase b = random_arithmetic(gen, tags, budget, transcendental);
  if (op == PrimOp::Div && std::abs(b.reference.scalar()) < 0.5) op = PrimOp::Mul;
  const PrimitiveRule& used = *rule_for(op);
  return {apply_binary(used, a.engine, b.engine), oracle::poly_op(op, a.reference, b.reference),
          a.operations + b.operations + 1};
}

}  // namespace detail

/// At most `max_operations` primitive applications. With `transcendental`
/// false only +, -, * and neg are used.
inline ArithmeticCase random_arithmetic(ValueGenerator& gen, const oracle::TagMap& tags,
                                        int max_operations, bool transcendental) {
  int budget = max_operations;
  return detail::random_arithmetic(gen, tags, budget, transcendental);
}

}  // namespace tagad::testing
