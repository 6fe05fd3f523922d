#include <doctest.h>

#include <random>
#include <sstream>

#include "aoiadv/io.hpp"

using namespace aoiadv;

TEST_CASE("grid text") {
  auto m = BlockingMatrix::all_ones(2, 4).with(1, 2, 0).with(2, 4, 0);
  CHECK(to_grid(m) == "1011\n1110\n");
  CHECK(parse_grid("1011\n1110\n") == m);
  CHECK(parse_grid("1011\n1110") == m);
  CHECK_THROWS_AS(parse_grid(""), ShapeError);
  CHECK_THROWS_AS(parse_grid("101\n11\n"), ShapeError);
  CHECK_THROWS_AS(parse_grid("1021\n"), ShapeError);
}

TEST_CASE("property: grid and JSON round trips") {
  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    const int rows = std::uniform_int_distribution(1, 5)(rng);
    const int horizon = std::uniform_int_distribution(1, 20)(rng);
    auto m = BlockingMatrix::all_ones(rows, horizon);
    for (int t = 1; t <= horizon; ++t) {
      if (rng() % 3 == 0) m = m.with(std::uniform_int_distribution(1, rows)(rng), t, 0);
    }
    CHECK(parse_grid(to_grid(m)) == m);

    const int n = std::uniform_int_distribution(2, 4)(rng);
    const auto config = rows >= 2 && rng() % 2 ? SystemConfig::with_budget(n, horizon, horizon, rows)
                                               : SystemConfig::with_budget(rows, horizon, horizon);
    auto [config2, m2] = matrix_from_json(json::parse(matrix_to_json(config, m).dump()));
    CHECK(m2 == m);
    CHECK(config2.n_users() == config.n_users());
    CHECK(config2.horizon() == config.horizon());
    CHECK(config2.alpha() == config.alpha());
    CHECK(config2.n_subcarriers() == config.n_subcarriers());
  }
}

TEST_CASE("config JSON keeps alpha exact") {
  SystemConfig config(3, 7, Rational(2, 7), 2);
  auto j = to_json(config);
  CHECK(j["alpha"] == "2/7");
  CHECK(j["budget"] == 2);
  CHECK(config_from_json(j).alpha() == Rational(2, 7));
  j["alpha"] = "0.5";
  CHECK(config_from_json(j).alpha() == Rational(1, 2));
}

TEST_CASE("trajectory CSV and JSON") {
  SystemConfig config(2, 3, Rational(0));
  auto traj = age_by_recursion(config, BlockingMatrix::all_ones(2, 3));
  std::ostringstream os;
  write_trajectory_csv(os, traj);
  const std::string csv = os.str();
  CHECK(csv.rfind("t,user,delta_exact_num,delta_exact_den,delta_float\n", 0) == 0);
  CHECK(csv.find("\n2,1,3,2,1.5") != std::string::npos);
  auto j = to_json(traj);
  CHECK(j["overall_mean"]["num"] == "17");
  CHECK(j["overall_mean"]["den"] == "12");
  CHECK(j["indexing"] == "raw");
}

TEST_CASE("maximizer JSON") {
  const auto config = SystemConfig::with_budget(2, 4, 1);
  auto set = brute_force_optimum(config);
  auto j = to_json(set);
  CHECK(j["maximizer_count"] == set.maximizers.size());
  std::string grid;
  for (const auto& row : j["maximizers"][0]) grid += row.get<std::string>() + "\n";
  CHECK(parse_grid(grid) == set.maximizers[0]);
  CHECK(Rational(j["best_value"]["num"].get<std::string>() + "/" + j["best_value"]["den"].get<std::string>()) ==
        set.best_value);
}

TEST_CASE("trace CSV") {
  const auto config = SystemConfig::with_budget(2, 3, 0);
  auto tr = trace_randomized(config, BlockingMatrix::all_ones(2, 3), 1, 4);
  std::ostringstream os;
  write_trace_csv(os, tr);
  std::istringstream is(os.str());
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(line.rfind("4,", 0) == 0);
  }
  CHECK(rows == 6);
}
