#include "aoiadv/bounds.hpp"

#include <stdexcept>

namespace aoiadv {

Rational lemma1_lower(int horizon, const Rational& alpha) {
  return Rational(horizon) * alpha * alpha / 2;
}

Rational lemma2_lower(int horizon, const Rational& alpha, int n_users) {
  if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
  return lemma1_lower(horizon, alpha) / n_users;
}

Rational thm2_upper(int horizon, int n_users) {
  if (horizon < 1 || n_users < 1) throw std::invalid_argument("horizon and n_users must be >= 1");
  return Rational(horizon + 1, 2 * n_users) + (n_users - 1);
}

Rational budget_upper_diagnostic(int horizon, const Rational& alpha, int n_users) {
  if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
  const long long budget = floor_to_int(alpha * horizon);
  return Rational(n_users) + Rational(budget, n_users);
}

RenewalQuantities renewal_quantities(const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("q must lie in (0,1)");
  RenewalQuantities r;
  r.expected_cycle_cost = 1 / (q * q * (1 - q));
  r.expected_cycle_length = 1 / (q * (1 - q));
  r.long_run_age = r.expected_cycle_cost / r.expected_cycle_length;
  return r;
}

Rational cycle_cost(long long tau_tr, long long tau_ntr) {
  if (tau_tr < 0 || tau_ntr < 0) throw std::invalid_argument("cycle lengths must be >= 0");
  return Rational(tau_tr) + Rational(tau_ntr * tau_ntr, 2) + Rational(3 * tau_ntr, 2);
}

Rational thm4_upper(int n_users, int n_subcarriers) {
  if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
  if (n_subcarriers < 2) throw std::invalid_argument("n_subcarriers must be >= 2");
  return Rational(n_users * n_subcarriers, n_subcarriers - 1);
}

Rational lb_modified(int n_users) {
  if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
  return Rational(n_users + 1, 2);
}

OptimalityRatios optimality_ratios(const SystemConfig& config) {
  OptimalityRatios ratios;
  if (config.alpha() == 0 && !config.subcarrier_model()) {
    throw std::invalid_argument("optimality ratio is undefined for alpha = 0");
  }
  if (config.alpha() > 0) {
    ratios.single_finite = thm2_upper(config.horizon(), config.n_users()) /
                           lemma2_lower(config.horizon(), config.alpha(), config.n_users());
    ratios.single_asymptotic = 1 / (config.alpha() * config.alpha());
  }
  if (auto n_sub = config.n_subcarriers()) {
    ratios.subcarrier_finite = thm4_upper(config.n_users(), *n_sub) / lb_modified(config.n_users());
    ratios.subcarrier_asymptotic = Rational(2 * *n_sub, *n_sub - 1);
  }
  return ratios;
}

std::vector<BoundReport> bounds_table(const SystemConfig& config) {
  const int n = config.n_users();
  const int horizon = config.horizon();
  const Rational& alpha = config.alpha();
  std::vector<BoundReport> table;
  auto add = [&](std::string name, Rational value, bool diagnostic = false) {
    table.push_back({std::move(name), std::move(value), n, horizon, alpha, config.n_subcarriers(),
                     diagnostic});
  };
  add("lemma1", lemma1_lower(horizon, alpha));
  add("lemma2", lemma2_lower(horizon, alpha, n));
  add("thm2_upper", thm2_upper(horizon, n));
  add("budget_upper_diagnostic", budget_upper_diagnostic(horizon, alpha, n), true);
  if (auto n_sub = config.n_subcarriers()) add("thm4_upper", thm4_upper(n, *n_sub));
  add("lb_modified", lb_modified(n));
  if (alpha > 0 || config.subcarrier_model()) {
    const auto ratios = optimality_ratios(config);
    if (ratios.single_finite) {
      add("ratio_single", *ratios.single_finite);
      add("ratio_single_asymptotic", *ratios.single_asymptotic);
    }
    if (ratios.subcarrier_finite) {
      add("ratio_subcarrier", *ratios.subcarrier_finite);
      add("ratio_subcarrier_asymptotic", *ratios.subcarrier_asymptotic);
    }
  }
  return table;
}

}  // namespace aoiadv
