#include "aoiadv/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace aoiadv {

std::string to_grid(const BlockingMatrix& sigma) {
  std::string out;
  out.reserve(static_cast<std::size_t>(sigma.rows() * (sigma.horizon() + 1)));
  for (int r = 1; r <= sigma.rows(); ++r) {
    for (auto v : sigma.row(r)) out.push_back(v ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BlockingMatrix parse_grid(std::string_view text) {
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::uint8_t> current;
  bool open_line = false;
  for (char c : text) {
    if (c == '\n') {
      if (!open_line) throw ShapeError("empty line in blocking grid");
      rows.push_back(std::move(current));
      current.clear();
      open_line = false;
    } else if (c == '0' || c == '1') {
      current.push_back(c == '1' ? 1 : 0);
      open_line = true;
    } else {
      throw ShapeError(std::string("unexpected character '") + c + "' in blocking grid");
    }
  }
  if (open_line) rows.push_back(std::move(current));
  return BlockingMatrix::from_rows(rows);
}

json to_json(const SystemConfig& config) {
  json j;
  j["n_users"] = config.n_users();
  j["horizon"] = config.horizon();
  j["alpha"] = to_string(config.alpha());
  j["budget"] = config.budget();
  j["n_subcarriers"] = config.n_subcarriers() ? json(*config.n_subcarriers()) : json(nullptr);
  return j;
}

SystemConfig config_from_json(const json& j) {
  std::optional<int> n_sub;
  if (j.contains("n_subcarriers") && !j.at("n_subcarriers").is_null()) {
    n_sub = j.at("n_subcarriers").get<int>();
  }
  const json& alpha = j.at("alpha");
  Rational a = alpha.is_string() ? parse_rational(alpha.get<std::string>())
                                 : parse_rational(alpha.dump());
  return SystemConfig(j.at("n_users").get<int>(), j.at("horizon").get<int>(), a, n_sub);
}

json matrix_to_json(const SystemConfig& config, const BlockingMatrix& sigma) {
  json j = to_json(config);
  json grid = json::array();
  for (int r = 1; r <= sigma.rows(); ++r) {
    std::string line;
    for (auto v : sigma.row(r)) line.push_back(v ? '1' : '0');
    grid.push_back(line);
  }
  j["grid"] = grid;
  return j;
}

std::pair<SystemConfig, BlockingMatrix> matrix_from_json(const json& j) {
  SystemConfig config = config_from_json(j);
  std::string text;
  for (const auto& line : j.at("grid")) text += line.get<std::string>() + "\n";
  BlockingMatrix sigma = parse_grid(text);
  return {std::move(config), std::move(sigma)};
}

namespace {

std::string num_str(const Rational& r) { return boost::multiprecision::numerator(r).str(); }
std::string den_str(const Rational& r) { return boost::multiprecision::denominator(r).str(); }

json rational_json(const Rational& r) {
  return json{{"num", num_str(r)}, {"den", den_str(r)}, {"float", to_double(r)}};
}

const char* indexing_name(Indexing i) { return i == Indexing::raw ? "raw" : "shifted"; }

}  // namespace

void write_trajectory_csv(std::ostream& os, const AgeTrajectory& trajectory) {
  os << "t,user,delta_exact_num,delta_exact_den,delta_float\n";
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  for (int t = 1; t <= trajectory.horizon(); ++t) {
    for (int i = 1; i <= trajectory.n_users(); ++i) {
      const Rational& v = trajectory.at(i, t);
      os << t << ',' << i << ',' << num_str(v) << ',' << den_str(v) << ',' << to_double(v) << '\n';
    }
  }
  os.precision(old_precision);
}

json to_json(const AgeTrajectory& trajectory) {
  json users = json::array();
  for (int i = 1; i <= trajectory.n_users(); ++i) {
    json values = json::array();
    for (int t = 1; t <= trajectory.horizon(); ++t) values.push_back(to_string(trajectory.at(i, t)));
    users.push_back({{"user", i},
                     {"delta", values},
                     {"mean", rational_json(trajectory.per_user_mean(i))}});
  }
  return json{{"indexing", indexing_name(trajectory.indexing())},
              {"horizon", trajectory.horizon()},
              {"per_user", users},
              {"overall_mean", rational_json(trajectory.overall_mean())}};
}

json to_json(const MaximizerSet& set) {
  json matrices = json::array();
  for (const auto& m : set.maximizers) {
    json grid = json::array();
    for (int r = 1; r <= m.rows(); ++r) {
      std::string line;
      for (auto v : m.row(r)) line.push_back(v ? '1' : '0');
      grid.push_back(line);
    }
    matrices.push_back(grid);
  }
  return json{{"best_value", {{"num", num_str(set.best_value)}, {"den", den_str(set.best_value)}}},
              {"best_value_float", to_double(set.best_value)},
              {"enumerated_count", set.enumerated_count},
              {"maximizer_count", set.maximizers.size()},
              {"maximizers", matrices}};
}

json to_json(const SimulationReport& report) {
  return json{{"scheme", to_string(report.scheme)},
              {"empirical_overall_mean", report.empirical_overall_mean},
              {"empirical_per_user_mean", report.empirical_per_user_mean},
              {"per_user_std_error", report.per_user_std_error},
              {"std_error", report.std_error},
              {"n_runs", report.n_runs},
              {"seed", report.seed}};
}

void write_report_csv(std::ostream& os, const SimulationReport& report) {
  os << "scheme,seed,n_runs,user,mean,std_error\n";
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < report.empirical_per_user_mean.size(); ++i) {
    os << to_string(report.scheme) << ',' << report.seed << ',' << report.n_runs << ',' << i + 1
       << ',' << report.empirical_per_user_mean[i] << ',' << report.per_user_std_error[i] << '\n';
  }
  os << to_string(report.scheme) << ',' << report.seed << ',' << report.n_runs << ",all,"
     << report.empirical_overall_mean << ',' << report.std_error << '\n';
  os.precision(old_precision);
}

json to_json(const BoundReport& bound) {
  json inputs{{"n_users", bound.n_users}, {"horizon", bound.horizon}, {"alpha", to_string(bound.alpha)}};
  if (bound.n_subcarriers) inputs["n_subcarriers"] = *bound.n_subcarriers;
  return json{{"name", bound.name},
              {"value", to_string(bound.value)},
              {"value_float", to_double(bound.value)},
              {"diagnostic", bound.diagnostic},
              {"inputs", inputs}};
}

json to_json(const ExactComparison& comparison) {
  return json{{"max_standardized_deviation", comparison.max_standardized_deviation},
              {"worst_user", comparison.worst_user},
              {"worst_slot", comparison.worst_slot},
              {"flagged", comparison.flagged},
              {"flag_threshold", ExactComparison::flag_threshold}};
}

void write_trace_csv(std::ostream& os, const RunTrace& trace) {
  for (std::size_t t = 0; t < trace.per_slot_choice.size(); ++t) {
    const auto& choice = trace.per_slot_choice[t];
    for (std::size_t i = 0; i < trace.realized_age.size(); ++i) {
      const bool served = static_cast<int>(i + 1) == choice.user;
      os << trace.run_index << ',' << t + 1 << ',' << i + 1 << ',' << (served ? 1 : 0) << ','
         << (served && choice.subcarrier ? *choice.subcarrier : 0) << ','
         << trace.realized_age[i][t] << '\n';
    }
  }
}

}  // namespace aoiadv
