#pragma once

#include <span>
#include <vector>

#include "aoiadv/model.hpp"
#include "aoiadv/rational.hpp"

namespace aoiadv {

/// Which window of the expected-age sequence a trajectory reports.
///
/// The engine always computes the raw sequence Delta(1..T+1), where Delta(1)
/// is 1 and Delta(t+1) depends on sigma(1..t). `raw` reports Delta(1..T) in
/// physical time (what a simulator observes). `shifted` reports Delta(2..T+1)
/// at slots 1..T, so the horizon average depends on every column of sigma.
/// All adversary optimisation uses `shifted`.
enum class Indexing { raw, shifted };

/// Exact per-user expected ages.
class AgeTrajectory {
 public:
  /// `raw_per_user[i]` holds Delta_i(1..T+1).
  AgeTrajectory(std::vector<std::vector<Rational>> raw_per_user, Indexing indexing);

  int n_users() const { return static_cast<int>(raw_.size()); }
  int horizon() const { return horizon_; }
  Indexing indexing() const { return indexing_; }

  /// Value reported at slot t (1..T) for user (1..N) under this indexing.
  const Rational& at(int user, int slot) const;
  /// Raw Delta_user(t) for t in 1..T+1.
  const Rational& raw_at(int user, int t) const;

  AgeTrajectory with_indexing(Indexing indexing) const { return {raw_, indexing}; }

  /// (1/T) sum_t at(user, t).
  Rational per_user_mean(int user) const;
  /// Sum over slots of at(user, t).
  Rational per_user_total(int user) const;
  /// (1/N) sum_i per_user_mean(i).
  Rational overall_mean() const;

  bool operator==(const AgeTrajectory& other) const {
    return raw_ == other.raw_ && indexing_ == other.indexing_;
  }

 private:
  std::vector<std::vector<Rational>> raw_;
  int horizon_;
  Indexing indexing_;
};

/// Delta(t+1) = Delta(t) (1 - sigma(t)/N) + 1, Delta(1) = 1. Single-channel
/// model only; throws InfeasibleError for an infeasible sigma.
AgeTrajectory age_by_recursion(const SystemConfig& config, const BlockingMatrix& sigma,
                               Indexing indexing = Indexing::raw);

/// Delta(t+1) = sum_{l=1..t} Gamma(l,t) + 1, must agree exactly with the
/// recursion.
AgeTrajectory age_by_trains(const SystemConfig& config, const BlockingMatrix& sigma,
                            Indexing indexing = Indexing::raw);

/// Gamma(k,l): product over slots k..l of 1 - sigma(j)/N, with N the user
/// count. Throws std::invalid_argument unless 1 <= k <= l <= row size.
Rational train_value(const SystemConfig& config, std::span<const std::uint8_t> sigma_row, int k,
                     int l);

/// Sub-carrier recursion. The multiplier is 1 - s(t)/(N N_sub) with s(t) the
/// number of unblocked sub-carriers in slot t. The result does not depend on
/// the user, so the single trajectory is replicated for every user.
AgeTrajectory age_by_recursion_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                                          Indexing indexing = Indexing::raw);

/// Train form of the sub-carrier model; per-slot factors are (N-1)/N when no
/// sub-carrier is blocked and 1 - (N_sub-1)/(N N_sub) otherwise.
AgeTrajectory age_by_trains_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                                       Indexing indexing = Indexing::raw);

/// Sub-carrier train value over slots k..l.
Rational subcarrier_train_value(const SystemConfig& config, const BlockingMatrix& sigma, int k,
                                int l);

/// Dispatches on config.subcarrier_model().
AgeTrajectory expected_age(const SystemConfig& config, const BlockingMatrix& sigma,
                           Indexing indexing = Indexing::raw);

/// (1/T) sum_t (1/N) sum_i Delta_i(t) under the trajectory's indexing.
Rational objective(const SystemConfig& config, const AgeTrajectory& trajectory);

/// Total expected age of one user with blocking row `row` and N users, summed
/// over slots 1..T of the given indexing.
Rational row_total_age(int n_users, std::span<const std::uint8_t> row,
                       Indexing indexing = Indexing::shifted);

}  // namespace aoiadv
