#include <doctest.h>

#include <random>

#include "aoiadv/model.hpp"

using namespace aoiadv;

TEST_CASE("budget is floor(alpha * T)") {
  CHECK(SystemConfig(2, 10, Rational(1, 4)).budget() == 2);
  CHECK(SystemConfig(2, 4, Rational(1, 4)).budget() == 1);
  CHECK(SystemConfig(3, 7, Rational(1)).budget() == 7);
  CHECK(SystemConfig(3, 7, Rational(0)).budget() == 0);
  CHECK(SystemConfig::with_budget(2, 6, 2).alpha() == Rational(1, 3));
}

TEST_CASE("config rejects bad parameters") {
  CHECK_THROWS_AS(SystemConfig(0, 5, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, 0, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, 5, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, 5, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, 5, Rational(1, 2), 1), std::invalid_argument);
  CHECK(SystemConfig(2, 5, Rational(1, 2), 3).rows() == 3);
  CHECK(SystemConfig(2, 5, Rational(1, 2)).rows() == 2);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("0.2") == Rational(1, 5));
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(Rational(17, 12)) == "17/12");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("validate: all ones is feasible for any config") {
  for (int n : {1, 2, 5}) {
    SystemConfig config(n, 7, Rational(0));
    CHECK(validate(config, BlockingMatrix::all_ones(n, 7)).feasible());
  }
}

TEST_CASE("validate: budget violation") {
  SystemConfig config(2, 4, Rational(1, 4));
  auto sigma = BlockingMatrix::all_ones(2, 4).with(1, 2, 0).with(2, 3, 0);
  auto verdict = validate(config, sigma);
  CHECK_FALSE(verdict.feasible());
  CHECK_FALSE(verdict.budget_ok);
  CHECK(verdict.columns_ok);
  REQUIRE(verdict.violations.size() == 1);
  CHECK(verdict.violations[0].kind == Violation::Kind::budget);
  CHECK(verdict.violations[0].zeros == 2);
  CHECK(verdict.violations[0].limit == 1);
  CHECK_THROWS_AS(require_feasible(config, sigma), InfeasibleError);
}

TEST_CASE("validate: two blocks in one column") {
  SystemConfig config(2, 4, Rational(1, 2));
  auto sigma = BlockingMatrix::all_ones(2, 4).with(1, 2, 0).with(2, 2, 0);
  auto verdict = validate(config, sigma);
  CHECK(verdict.budget_ok);
  CHECK_FALSE(verdict.columns_ok);
  REQUIRE(verdict.violations.size() == 1);
  CHECK(verdict.violations[0].slot == 2);
  CHECK(verdict.describe().find("slot 2") != std::string::npos);
}

TEST_CASE("validate: both violations are reported independently") {
  SystemConfig config(2, 4, Rational(1, 4));
  auto sigma = BlockingMatrix::all_ones(2, 4).with(1, 2, 0).with(2, 2, 0);
  auto verdict = validate(config, sigma);
  CHECK_FALSE(verdict.budget_ok);
  CHECK_FALSE(verdict.columns_ok);
  CHECK(verdict.violations.size() == 2);
}

TEST_CASE("validate: shape mismatch is a distinct error") {
  SystemConfig config(2, 4, Rational(1, 2));
  CHECK_THROWS_AS(validate(config, BlockingMatrix::all_ones(3, 4)), ShapeError);
  CHECK_THROWS_AS(validate(config, BlockingMatrix::all_ones(2, 5)), ShapeError);
  SystemConfig sub(2, 4, Rational(1, 2), 3);
  CHECK_THROWS_AS(validate(sub, BlockingMatrix::all_ones(2, 4)), ShapeError);
  CHECK(validate(sub, BlockingMatrix::all_ones(3, 4)).feasible());
}

TEST_CASE("cbs_to_matrix") {
  SystemConfig config(2, 10, Rational(1, 2));
  auto m = cbs_to_matrix(config, {1, 4, 3});
  for (int t = 1; t <= 10; ++t) {
    CHECK(m.at(1, t) == ((t >= 4 && t <= 6) ? 0 : 1));
    CHECK(m.at(2, t) == 1);
  }
  CHECK(cbs_to_matrix(config, {1, 1, 0}) == BlockingMatrix::all_ones(2, 10));
  CHECK_THROWS_AS(cbs_to_matrix(config, {1, 9, 3}), std::out_of_range);
  CHECK_THROWS_AS(cbs_to_matrix(config, {3, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(cbs_to_matrix(SystemConfig(2, 10, Rational(1, 5)), {1, 1, 3}),
                  std::invalid_argument);
}

TEST_CASE("CbsDescriptor L and R") {
  CbsDescriptor d{1, 4, 3};
  CHECK(d.left_ones() == 3);
  CHECK(d.right_ones(10) == 4);
  CHECK(d.end() == 6);
}

TEST_CASE("property: validate accepts every in-budget CBS") {
  std::mt19937 rng(7);
  for (int k = 0; k < 500; ++k) {
    const int n = std::uniform_int_distribution(1, 5)(rng);
    const int horizon = std::uniform_int_distribution(1, 15)(rng);
    const int budget = std::uniform_int_distribution(0, horizon)(rng);
    const auto config = SystemConfig::with_budget(n, horizon, budget);
    const int len = std::uniform_int_distribution(0, budget)(rng);
    const int start = std::uniform_int_distribution(1, horizon - len + 1)(rng);
    const int row = std::uniform_int_distribution(1, n)(rng);
    CHECK(validate(config, cbs_to_matrix(config, {row, start, len})).feasible());
  }
}

TEST_CASE("BlockingMatrix rejects bad input") {
  CHECK_THROWS_AS(BlockingMatrix::from_rows({{1, 0}, {1}}), ShapeError);
  CHECK_THROWS_AS(BlockingMatrix::from_rows({{1, 2}}), ShapeError);
  CHECK_THROWS_AS(BlockingMatrix::from_rows({}), ShapeError);
  CHECK_THROWS_AS(BlockingMatrix::all_ones(2, 2).with(3, 1, 0), std::out_of_range);
}
