#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aoiadv/model.hpp"

namespace aoiadv {

/// Counter-based generator: every draw is a pure function of
/// (seed, run, slot, stream).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t run, std::uint64_t slot, std::uint64_t stream = 0) const;
  /// Uniform in {0, ..., n-1}.
  int index(int n, std::uint64_t run, std::uint64_t slot, std::uint64_t stream = 0) const;

 private:
  std::uint64_t seed_;
};

enum class Scheme { randomized, round_robin, randomized_subcarrier };
std::string to_string(Scheme scheme);

struct SlotChoice {
  int user;                       ///< 1-based
  std::optional<int> subcarrier;  ///< 1-based, sub-carrier model only
};

/// One realisation. realized_age[i][t-1] is a_{i+1}(t) for t = 1..T.
struct RunTrace {
  std::uint64_t seed = 0;
  std::uint64_t run_index = 0;
  std::vector<SlotChoice> per_slot_choice;
  std::vector<std::vector<std::int64_t>> realized_age;
};

/// Running (count, sum, sum of squares); merge is associative.
struct Moments {
  std::uint64_t count = 0;
  double sum = 0;
  double sum_sq = 0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  void merge(const Moments& o) {
    count += o.count;
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  /// Standard error of the mean from the unbiased sample variance.
  double std_error() const;
};

struct SimulationReport {
  Scheme scheme = Scheme::randomized;
  double empirical_overall_mean = 0;
  std::vector<double> empirical_per_user_mean;
  std::vector<double> per_user_std_error;
  double std_error = 0;
  std::uint64_t n_runs = 0;
  std::uint64_t seed = 0;
  /// per_slot[i][t-1]: across-run moments of a_{i+1}(t); filled on request.
  std::vector<std::vector<Moments>> per_slot;
};

struct SimOptions {
  int workers = 0;  ///< 0: see worker_count()
  bool per_slot = false;
};

RunTrace trace_randomized(const SystemConfig& config, const BlockingMatrix& sigma,
                          std::uint64_t seed, std::uint64_t run_index);
RunTrace trace_randomized_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                                     std::uint64_t seed, std::uint64_t run_index);

/// Uniform 1/N scheduler. Throws std::invalid_argument for n_runs = 0 and
/// InfeasibleError for an infeasible sigma.
SimulationReport simulate_randomized(const SystemConfig& config, const BlockingMatrix& sigma,
                                     std::uint64_t n_runs, std::uint64_t seed,
                                     const SimOptions& options = {});

/// Uniform user and uniform sub-carrier per slot; the update gets through iff
/// the chosen sub-carrier is open.
SimulationReport simulate_randomized_subcarrier(const SystemConfig& config,
                                                const BlockingMatrix& sigma, std::uint64_t n_runs,
                                                std::uint64_t seed, const SimOptions& options = {});

/// Adversary that knows the cyclic order and jams the served user for
/// budget() consecutive slots starting at `start` (default: centered).
struct WorstCaseAdversary {
  std::optional<int> start;
};
using RoundRobinAdversary = std::variant<WorstCaseAdversary, BlockingMatrix>;

/// User served by round robin in slot t (1-based): ((t-1) mod N) + 1.
int round_robin_user(int n_users, int slot);

/// Matrix built by the worst-case adversary. Throws std::out_of_range when the
/// block does not fit.
BlockingMatrix round_robin_worst_case_matrix(const SystemConfig& config,
                                             std::optional<int> start = std::nullopt);

/// Deterministic cyclic service; the report always has n_runs = 1.
SimulationReport simulate_round_robin(const SystemConfig& config,
                                      const RoundRobinAdversary& adversary, std::uint64_t n_runs,
                                      std::uint64_t seed);

/// Realised ages under round robin, indexed like RunTrace::realized_age.
std::vector<std::vector<std::int64_t>> round_robin_ages(const SystemConfig& config,
                                                        const BlockingMatrix& sigma);

struct ExactComparison {
  double max_standardized_deviation = 0;
  int worst_user = 0;
  int worst_slot = 0;
  bool flagged = false;  ///< max deviation > flag_threshold
  /// deviation[i][t-1] = |mean a_{i+1}(t) - Delta_{i+1}(t)| / SE
  std::vector<std::vector<double>> deviation;
  static constexpr double flag_threshold = 4.0;
};

/// Compares per-slot Monte Carlo means with the exact raw trajectory. A cell
/// with zero standard error scores 0 when it matches exactly and +inf
/// otherwise. Uses the sub-carrier model when configured.
ExactComparison empirical_vs_exact(const SystemConfig& config, const BlockingMatrix& sigma,
                                   std::uint64_t n_runs, std::uint64_t seed, int workers = 0);

/// Gaps between consecutive successful updates of `user` (1-based), read from
/// the slots where the realised age drops to 1.
std::vector<std::int64_t> inter_success_gaps(const RunTrace& trace, int user);

}  // namespace aoiadv
