#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aoiadv/model.hpp"
#include "aoiadv/rational.hpp"

namespace aoiadv {

/// T alpha^2 / 2: any deterministic scheduler against a consecutive block.
Rational lemma1_lower(int horizon, const Rational& alpha);

/// T alpha^2 / (2N): the randomized counterpart.
Rational lemma2_lower(int horizon, const Rational& alpha, int n_users);

/// (T+1)/(2N) + (N-1), charging the blocked user the full T(T+1)/2.
Rational thm2_upper(int horizon, int n_users);

/// N + floor(alpha T)/N. Diagnostic only: every user's expected age is at
/// most N plus the number of its slots blocked so far, so the bound holds for
/// any feasible blocking matrix. Tighter than thm2_upper exactly when
/// floor(alpha T) < (T+1)/2 - N.
Rational budget_upper_diagnostic(int horizon, const Rational& alpha, int n_users);

struct RenewalQuantities {
  Rational expected_cycle_cost;    ///< 1 / (q^2 (1-q))
  Rational expected_cycle_length;  ///< 1 / (q (1-q))
  Rational long_run_age;           ///< cost / length = 1/q
};

/// Throws std::invalid_argument unless 0 < q < 1.
RenewalQuantities renewal_quantities(const Rational& q);

/// Summed age over one cycle of tau_tr served slots then tau_ntr unserved:
/// tau_tr + tau_ntr^2/2 + 3 tau_ntr/2. Throws on negative lengths.
Rational cycle_cost(long long tau_tr, long long tau_ntr);

/// N N_sub / (N_sub - 1). Throws std::invalid_argument when N_sub < 2.
Rational thm4_upper(int n_users, int n_subcarriers);

/// N/2 + 1/2, the no-jamming lower bound with unit success probabilities.
Rational lb_modified(int n_users);

struct OptimalityRatios {
  std::optional<Rational> single_finite;      ///< thm2_upper / lemma2_lower
  std::optional<Rational> single_asymptotic;  ///< 1 / alpha^2
  std::optional<Rational> subcarrier_finite;      ///< thm4_upper / lb_modified
  std::optional<Rational> subcarrier_asymptotic;  ///< 2 N_sub / (N_sub - 1)
};

/// Single-channel ratios need alpha > 0; sub-carrier ratios are filled when
/// the configuration has n_subcarriers. Throws std::invalid_argument when
/// alpha = 0 and no sub-carrier count is present (nothing is defined).
OptimalityRatios optimality_ratios(const SystemConfig& config);

struct BoundReport {
  std::string name;  ///< lemma1 | lemma2 | thm2_upper | ... | ratio_subcarrier
  Rational value;
  int n_users = 0;
  int horizon = 0;
  Rational alpha;
  std::optional<int> n_subcarriers;
  bool diagnostic = false;  ///< not one of the published bounds
};

/// Every bound defined for the configuration, in a fixed order.
std::vector<BoundReport> bounds_table(const SystemConfig& config);

}  // namespace aoiadv
