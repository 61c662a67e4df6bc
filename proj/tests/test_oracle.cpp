#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"

using namespace tagad;
using namespace tagad::oracle;

TEST_CASE("poly_op ring arithmetic") {
  PolyDual x = PolyDual::constant(3) + PolyDual::epsilon(0);
  PolyDual sq = poly_op(PrimOp::Mul, x, x);
  CHECK(sq[0b0] == 9);
  CHECK(sq[0b1] == 6);

  // (1 + e1)(1 + e2) keeps the mixed term
  PolyDual a = PolyDual::constant(1) + PolyDual::epsilon(0);
  PolyDual b = PolyDual::constant(1) + PolyDual::epsilon(1);
  PolyDual ab = poly_op(PrimOp::Mul, a, b);
  CHECK(ab[0b00] == 1);
  CHECK(ab[0b01] == 1);
  CHECK(ab[0b10] == 1);
  CHECK(ab[0b11] == 1);

  CHECK(poly_op(PrimOp::Add, ab, PolyDual{}) == ab);
  CHECK(poly_op(PrimOp::Mul, PolyDual::epsilon(2), PolyDual::epsilon(2)) == PolyDual{});
}

TEST_CASE("poly_op transcendental expansion") {
  // exp(a + e1 + e2) = e^a (1 + e1 + e2 + e1 e2)
  PolyDual x = PolyDual::constant(0.5) + PolyDual::epsilon(0) + PolyDual::epsilon(1);
  PolyDual y = poly_op(PrimOp::Exp, x);
  double e = std::exp(0.5);
  for (unsigned s : {0u, 1u, 2u, 3u}) CHECK(y[s] == doctest::Approx(e).epsilon(1e-15));

  // sin(a + e1 + e2 + e3): the triple term is -cos(a)
  PolyDual z = PolyDual::constant(0.3) + PolyDual::epsilon(0) + PolyDual::epsilon(1) + PolyDual::epsilon(2);
  PolyDual s = poly_op(PrimOp::Sin, z);
  CHECK(s[0b111] == doctest::Approx(-std::cos(0.3)));
  CHECK(s[0b011] == doctest::Approx(-std::sin(0.3)));

  // x / x = 1 exactly in the nilpotent part
  PolyDual w = PolyDual::constant(2) + PolyDual::epsilon(0, 3) + PolyDual::epsilon(1, -1);
  PolyDual one = poly_op(PrimOp::Div, w, w);
  CHECK(one[0] == doctest::Approx(1));
  for (unsigned k = 1; k < PolyDual::terms; ++k) CHECK(std::abs(one[k]) < 1e-15);

  CHECK_THROWS_AS(poly_op(PrimOp::Div, w, PolyDual::epsilon(0)), std::domain_error);
  CHECK_THROWS_AS(poly_op(PrimOp::Log, PolyDual::constant(-1)), std::domain_error);
  CHECK_THROWS_AS(poly_op(PrimOp::Sqrt, PolyDual::constant(-1)), std::domain_error);
  CHECK_THROWS_AS(poly_op(PrimOp::Add, w), std::invalid_argument);
}

TEST_CASE("value_to_poly reads coefficients") {
  Tag e1 = fresh_tag();
  Tag e2 = fresh_tag();
  TagMap map{{e1.id, 0}, {e2.id, 1}};

  PolyDual p = value_to_poly(Value::dual(e1, Value::real(3), Value::real(4)), map);
  CHECK(p[0b00] == 3);
  CHECK(p[0b01] == 4);
  CHECK(p[0b10] == 0);

  PolyDual q = value_to_poly(
      Value::dual(e2, Value::dual(e1, Value::real(1), Value::real(2)), Value::real(3)), map);
  CHECK(q[0b00] == 1);
  CHECK(q[0b01] == 2);
  CHECK(q[0b10] == 3);
  CHECK(q[0b11] == 0);

  Tag stranger = fresh_tag();
  CHECK_THROWS_AS(value_to_poly(Value::dual(stranger, Value::real(1), Value::real(1)), map),
                  std::invalid_argument);
  CHECK_THROWS_AS(value_to_poly(Value::nil(), map), std::invalid_argument);
}

TEST_CASE("value/poly round trip") {
  std::vector<Tag> tags{fresh_tag(), fresh_tag(), fresh_tag()};
  TagMap map{{tags[0].id, 0}, {tags[1].id, 1}, {tags[2].id, 2}};
  testing::ValueGenerator gen(71, tags);
  for (int k = 0; k < 1000; ++k) {
    Value v = gen();
    PolyDual p = value_to_poly(v, map);
    Value expanded = poly_to_value(p, tags);
    CHECK(value_to_poly(expanded, map) == p);
    CHECK(well_formed(expanded));
  }
  // fully expanded values survive the round trip structurally
  PolyDual full;
  for (unsigned s = 0; s < PolyDual::terms; ++s) full[s] = s + 1;
  Value v = poly_to_value(full, tags);
  CHECK(structurally_equal(poly_to_value(value_to_poly(v, map), tags), v));
}

TEST_CASE("central differences") {
  auto square = [](double x) { return x * x; };
  auto cube = [](double x) { return x * x * x; };
  auto sin_fn = [](double x) { return std::sin(x); };
  auto exp_fn = [](double x) { return std::exp(x); };

  CHECK(std::abs(central_difference(square, 3.0, 1e-5) - 6) <= 1e-9);
  CHECK(std::abs(central_difference(sin_fn, 0.0, 1e-5) - 1) <= 1e-9);
  CHECK(std::abs(central_difference(exp_fn, 1.0, 1e-5) - std::numbers::e) <= 1e-6);

  CHECK(std::abs(second_central_difference(cube, 2.0) - 12) <= 1e-4);
  for (double x : {-3.0, 0.0, 0.7, 5.0}) CHECK(std::abs(second_central_difference(square, x) - 2) <= 1e-5);
  CHECK(std::abs(second_central_difference([](double) { return 4.2; }, 1.0)) <= 1e-6);

  CHECK_THROWS_AS(central_difference(square, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(second_central_difference(square, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("central differences of engine closures") {
  Value sq = run_program("(lambda (x) (* x x))", Mode::Guarded);
  CHECK(std::abs(central_difference(testing::as_real_function(sq), 3.0) - 6) <= 1e-9);
  Value bad = run_program("(lambda (x) (/ 1 (- x 1)))", Mode::Guarded);
  CHECK_THROWS_AS(central_difference(testing::as_real_function(bad), 1.0 - 1e-5), EvalError);
}
