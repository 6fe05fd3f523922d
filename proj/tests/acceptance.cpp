// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "aoiadv/adversary.hpp"
#include "aoiadv/bounds.hpp"
#include "aoiadv/exact_age.hpp"
#include "aoiadv/sched_sim.hpp"

using namespace aoiadv;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

BlockingMatrix random_feasible(std::mt19937_64& rng, int rows, int horizon, int budget) {
  auto sigma = BlockingMatrix::all_ones(rows, horizon);
  std::vector<int> slots(static_cast<std::size_t>(horizon));
  for (int t = 0; t < horizon; ++t) slots[static_cast<std::size_t>(t)] = t + 1;
  std::shuffle(slots.begin(), slots.end(), rng);
  const int zeros = std::uniform_int_distribution(0, budget)(rng);
  for (int k = 0; k < zeros; ++k) {
    sigma = sigma.with(std::uniform_int_distribution(1, rows)(rng), slots[static_cast<std::size_t>(k)], 0);
  }
  return sigma;
}

BlockingRow cbs_row(int horizon, int start, int len) {
  BlockingRow row(static_cast<std::size_t>(horizon), 1);
  std::fill_n(row.begin() + (start - 1), len, std::uint8_t{0});
  return row;
}

BlockingMatrix reverse_time(const BlockingMatrix& m) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (int r = 1; r <= m.rows(); ++r) rows.push_back(reverse_sequence(m.row(r)));
  return BlockingMatrix::from_rows(rows);
}

struct Instance {
  int n, horizon, budget;
};

std::vector<Instance> desk_instances() {
  std::vector<Instance> out;
  for (int n : {2, 3})
    for (int horizon : {6, 8, 10})
      for (int budget : {1, 2, 3}) out.push_back({n, horizon, budget});
  return out;
}

std::vector<std::pair<Instance, MaximizerSet>>& desk_results() {
  static std::vector<std::pair<Instance, MaximizerSet>> results = [] {
    std::vector<std::pair<Instance, MaximizerSet>> r;
    for (auto inst : desk_instances()) {
      r.emplace_back(inst, brute_force_optimum(SystemConfig::with_budget(inst.n, inst.horizon, inst.budget)));
    }
    return r;
  }();
  return results;
}

std::string describe(const Instance& i) {
  return "N=" + std::to_string(i.n) + " T=" + std::to_string(i.horizon) + " B=" + std::to_string(i.budget);
}

Outcome engine_equivalence() {
  std::mt19937_64 rng(2024);
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 1000; ++k) {
    const int n = std::uniform_int_distribution(1, 5)(rng);
    const int horizon = std::uniform_int_distribution(1, 12)(rng);
    const int budget = std::uniform_int_distribution(0, horizon)(rng);
    const auto config = SystemConfig::with_budget(n, horizon, budget);
    const auto sigma = random_feasible(rng, n, horizon, budget);
    if (!(age_by_recursion(config, sigma) == age_by_trains(config, sigma))) {
      return {false, "mismatch on matrix " + std::to_string(k)};
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "1000 matrices in " << std::setprecision(3) << secs << " s";
  return {secs < 30, os.str()};
}

Outcome maximizer_structure() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (const auto& [inst, set] : desk_results()) {
    if (set.maximizers.empty()) return {false, describe(inst) + ": empty maximizer set"};
    for (const auto& m : set.maximizers) {
      auto cbs = single_row_cbs(m);
      if (!cbs || cbs->length != inst.budget ||
          std::abs(cbs->left_ones() - cbs->right_ones(inst.horizon)) > 1) {
        return {false, describe(inst) + ": maximizer is not a full-budget centered CBS"};
      }
      ++total;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "18 instances, " << total << " maximizers, " << std::setprecision(3) << secs << " s";
  return {secs < 300, os.str()};
}

Outcome reversal_ties() {
  std::size_t rows = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int horizon = 1; horizon <= 12; ++horizon) {
      for (int len = 1; len <= horizon; ++len) {
        for (int start = 1; start + len - 1 <= horizon; ++start) {
          const auto row = cbs_row(horizon, start, len);
          if (row_total_age(n, row) != row_total_age(n, reverse_sequence(row))) {
            return {false, "tie broken at N=" + std::to_string(n) + " T=" + std::to_string(horizon)};
          }
          ++rows;
        }
      }
    }
  }
  for (const auto& [inst, set] : desk_results()) {
    const std::set<BlockingMatrix> all(set.maximizers.begin(), set.maximizers.end());
    for (const auto& m : set.maximizers) {
      if (!all.count(reverse_time(m))) return {false, describe(inst) + ": mirror missing"};
    }
  }
  return {true, std::to_string(rows) + " CBS rows tied; mirrors present in all 18 sets"};
}

Outcome centering_monotone() {
  std::size_t shifts = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int horizon = 2; horizon <= 12; ++horizon) {
      for (int len = 1; len < horizon; ++len) {
        for (int start = 1; start + len - 1 <= horizon; ++start) {
          CbsDescriptor d{1, start, len};
          auto dir = centering_direction(horizon, d);
          if (!dir) continue;
          auto moved = shift_cbs(horizon, d, *dir);
          if (row_total_age(n, cbs_row(horizon, moved.start, len)) < row_total_age(n, cbs_row(horizon, start, len))) {
            return {false, "decrease at N=" + std::to_string(n) + " T=" + std::to_string(horizon)};
          }
          ++shifts;
        }
      }
    }
  }
  return {true, std::to_string(shifts) + " centering shifts, no violations"};
}

Outcome merging_reaches_maximum() {
  std::size_t rows = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int horizon = 3; horizon <= 12; ++horizon) {
      for (int zeros = 2; zeros <= std::min(4, horizon - 1); ++zeros) {
        BlockingRow row(static_cast<std::size_t>(horizon), 1);
        std::fill_n(row.begin(), zeros, std::uint8_t{0});
        std::sort(row.begin(), row.end());
        Rational best = -1;
        std::vector<BlockingRow> two_block;
        do {
          best = std::max(best, row_total_age(n, row));
          if (zero_blocks(row).size() == 2) two_block.push_back(row);
        } while (std::next_permutation(row.begin(), row.end()));
        for (const auto& start : two_block) {
          auto path = merge_to_centered(n, start);
          for (std::size_t k = 1; k < path.totals.size(); ++k) {
            if (path.totals[k] < path.totals[k - 1]) return {false, "objective decreased along a merge"};
          }
          auto end = as_cbs(path.rows.back());
          if (!end || centering_direction(horizon, *end) || path.totals.back() != best) {
            return {false, "merge did not end at the centered maximum"};
          }
          ++rows;
        }
      }
    }
  }
  return {true, std::to_string(rows) + " two-block rows merged to the maximum"};
}

Outcome power_inequality() {
  std::mt19937_64 rng(6);
  std::size_t checked = 0, attempts = 0;
  while (checked < 10000) {
    ++attempts;
    const Rational beta(std::uniform_int_distribution(0, 100)(rng), 100);
    const int a = std::uniform_int_distribution(-20, 20)(rng);
    const int b = std::uniform_int_distribution(0, 20)(rng);
    const int c = std::uniform_int_distribution(-20, 20)(rng);
    if (c >= a) continue;
    if (beta == 0 && (c - b < 0 || c < 0)) continue;
    if (!lemma6_check(beta, a, b, c)) {
      return {false, "fails at beta=" + to_string(beta) + " a=" + std::to_string(a) + " b=" +
                         std::to_string(b) + " c=" + std::to_string(c)};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " samples hold exactly"};
}

Outcome bound_sandwich() {
  for (const auto& [inst, set] : desk_results()) {
    const Rational alpha(inst.budget, inst.horizon);
    const Rational lower = lemma2_lower(inst.horizon, alpha, inst.n);
    const Rational upper = thm2_upper(inst.horizon, inst.n);
    if (!(lower <= set.best_value && set.best_value <= upper)) {
      return {false, describe(inst) + ": optimum " + to_string(set.best_value) + " outside [" +
                         to_string(lower) + ", " + to_string(upper) + "]"};
    }
  }
  return {true, "lemma2_lower <= optimum <= thm2_upper on all 18 instances"};
}

Outcome renewal_limit() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream os;
  bool ok = true;
  for (int n : {2, 4, 8}) {
    SystemConfig config(n, 5000, Rational(0));
    auto report = simulate_randomized(config, BlockingMatrix::all_ones(n, 5000), 200, 800 + n);
    for (double mean : report.empirical_per_user_mean) ok &= std::abs(mean - n) <= 0.02 * n;
    os << "N=" << n << " mean " << std::setprecision(5) << report.empirical_overall_mean << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  os << std::setprecision(3) << secs << " s";
  return {ok && secs < 120, os.str()};
}

Outcome subcarrier_bounds() {
  std::ostringstream os;
  bool ok = true;
  for (int n : {2, 4}) {
    for (int n_sub : {2, 4, 8}) {
      SystemConfig config(n, 5000, Rational(1, 5), n_sub);
      const auto block = centered_cbs(config, 1, config.budget());
      auto sigma = BlockingMatrix::all_ones(n_sub, 5000);
      for (int t = block.start; t <= block.end(); ++t) sigma = sigma.with(1, t, 0);
      auto report = simulate_randomized_subcarrier(config, sigma, 200, 900 + 10 * n + n_sub);
      const double upper = to_double(thm4_upper(n, n_sub)) + 3 * report.std_error;
      const double lower = to_double(lb_modified(n)) - 3 * report.std_error;
      const bool inside = report.empirical_overall_mean <= upper && report.empirical_overall_mean >= lower;
      ok &= inside;
      if (!inside) os << "N=" << n << " Nsub=" << n_sub << " mean " << report.empirical_overall_mean << " out; ";
    }
  }
  if (ok) os << "6 configurations inside [lb_modified - 3SE, thm4_upper + 3SE]";
  return {ok, os.str()};
}

Outcome round_robin_growth() {
  std::ostringstream os;
  bool ok = true;
  std::vector<double> ratios;
  for (int horizon : {200, 500, 1000}) {
    SystemConfig config(4, horizon, Rational(1, 2));
    auto report = simulate_round_robin(config, WorstCaseAdversary{}, 1, 1);
    ok &= report.empirical_overall_mean >= horizon * 0.125;
    ratios.push_back(report.empirical_overall_mean / horizon);
    os << "T=" << horizon << " mean/T " << std::setprecision(5) << ratios.back() << "; ";
  }
  ok &= std::abs(ratios[2] - ratios[1]) <= std::abs(ratios[1] - ratios[0]);
  ok &= ratios[2] >= 0.125 && ratios[2] <= 1.1 * 0.125;
  return {ok, os.str()};
}

Outcome monte_carlo_vs_exact() {
  std::mt19937_64 rng(11);
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const int n = std::uniform_int_distribution(2, 3)(rng);
    const int horizon = std::uniform_int_distribution(3, 8)(rng);
    const int budget = std::uniform_int_distribution(1, horizon)(rng);
    const bool sub = k % 4 == 3;
    const int n_sub = sub ? std::uniform_int_distribution(2, 3)(rng) : 0;
    const auto config = sub ? SystemConfig::with_budget(n, horizon, budget, n_sub)
                            : SystemConfig::with_budget(n, horizon, budget);
    const auto sigma = random_feasible(rng, config.rows(), horizon, budget);
    auto cmp = empirical_vs_exact(config, sigma, 100000, 1000 + static_cast<std::uint64_t>(k));
    worst = std::max(worst, cmp.max_standardized_deviation);
  }
  std::ostringstream os;
  os << "20 instances, max standardized deviation " << std::setprecision(4) << worst;
  return {worst <= 4, os.str()};
}

Outcome optimality_ratio_values() {
  for (int p = 1; p <= 10; ++p) {
    const Rational alpha(p, 10);
    for (int n_sub : {2, 3, 4, 8, 16}) {
      auto r = optimality_ratios(SystemConfig(3, 100, alpha, n_sub));
      if (*r.single_asymptotic != 1 / (alpha * alpha) ||
          *r.subcarrier_asymptotic != Rational(2 * n_sub, n_sub - 1)) {
        return {false, "ratio mismatch at alpha=" + to_string(alpha)};
      }
    }
  }
  auto half = optimality_ratios(SystemConfig(3, 100, Rational(1, 2), 2));
  const bool four = *half.single_asymptotic == 4 && *half.subcarrier_asymptotic == 4;
  return {four, "1/alpha^2 and 2Nsub/(Nsub-1) exact; both 4 at alpha=1/2, Nsub=2"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"engine_equivalence", engine_equivalence},
      {"maximizer_structure", maximizer_structure},
      {"reversal_ties", reversal_ties},
      {"centering_monotone", centering_monotone},
      {"merging_reaches_maximum", merging_reaches_maximum},
      {"power_inequality", power_inequality},
      {"bound_sandwich", bound_sandwich},
      {"renewal_limit", renewal_limit},
      {"subcarrier_bounds", subcarrier_bounds},
      {"round_robin_growth", round_robin_growth},
      {"monte_carlo_vs_exact", monte_carlo_vs_exact},
      {"optimality_ratios", optimality_ratio_values},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
