#include "aoiadv/sched_sim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "aoiadv/exact_age.hpp"
#include "aoiadv/parallel.hpp"

namespace aoiadv {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kRunsPerChunk = 256;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t run, std::uint64_t slot, std::uint64_t stream) const {
  std::uint64_t h = splitmix64(seed_);
  h = splitmix64(h ^ run);
  h = splitmix64(h ^ slot);
  return splitmix64(h ^ stream);
}

int CounterRng::index(int n, std::uint64_t run, std::uint64_t slot, std::uint64_t stream) const {
  // 53-bit uniform
  const double u = static_cast<double>(bits(run, slot, stream) >> 11U) * 0x1.0p-53;
  return static_cast<int>(u * n);
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::randomized: return "randomized";
    case Scheme::round_robin: return "round_robin";
    case Scheme::randomized_subcarrier: return "randomized_subcarrier";
  }
  return "unknown";
}

double Moments::std_error() const {
  if (count < 2) return 0.0;
  const double n = static_cast<double>(count);
  const double m = sum / n;
  const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
  return std::sqrt(var / n);
}

namespace {

// Per-slot outcome of the scheduler: which user is served and whether the
// update gets through.
struct SlotOutcome {
  int user;  // 0-based
  std::optional<int> subcarrier;
  bool delivered;
};

class SlotSampler {
 public:
  SlotSampler(const SystemConfig& config, const BlockingMatrix& sigma, std::uint64_t seed)
      : config_(config), sigma_(sigma), rng_(seed) {}

  SlotOutcome draw(std::uint64_t run, int slot) const {
    const int user = rng_.index(config_.n_users(), run, static_cast<std::uint64_t>(slot), 0);
    if (config_.subcarrier_model()) {
      const int sub = rng_.index(*config_.n_subcarriers(), run, static_cast<std::uint64_t>(slot), 1);
      return {user, sub + 1, sigma_.at(sub + 1, slot) == 1};
    }
    return {user, std::nullopt, sigma_.at(user + 1, slot) == 1};
  }

 private:
  const SystemConfig& config_;
  const BlockingMatrix& sigma_;
  CounterRng rng_;
};

struct ChunkStats {
  std::vector<Moments> per_user;
  Moments overall;
  std::vector<std::vector<Moments>> per_slot;
};

void check_inputs(const SystemConfig& config, const BlockingMatrix& sigma, std::uint64_t n_runs,
                  bool subcarrier) {
  if (n_runs == 0) throw std::invalid_argument("n_runs must be positive");
  if (subcarrier != config.subcarrier_model()) {
    throw std::invalid_argument(subcarrier ? "configuration lacks n_subcarriers"
                                           : "configuration uses the sub-carrier model");
  }
  require_feasible(config, sigma);
}

SimulationReport simulate(const SystemConfig& config, const BlockingMatrix& sigma,
                          std::uint64_t n_runs, std::uint64_t seed, const SimOptions& options,
                          Scheme scheme) {
  check_inputs(config, sigma, n_runs, scheme == Scheme::randomized_subcarrier);
  const int n = config.n_users();
  const int horizon = config.horizon();
  const SlotSampler sampler(config, sigma, seed);

  const std::uint64_t n_chunks = (n_runs + kRunsPerChunk - 1) / kRunsPerChunk;
  std::vector<ChunkStats> chunks(static_cast<std::size_t>(n_chunks));
  parallel_for(static_cast<std::size_t>(n_chunks), worker_count(options.workers),
               [&](std::size_t c) {
                 ChunkStats& stats = chunks[c];
                 stats.per_user.resize(static_cast<std::size_t>(n));
                 if (options.per_slot) {
                   stats.per_slot.assign(static_cast<std::size_t>(n),
                                         std::vector<Moments>(static_cast<std::size_t>(horizon)));
                 }
                 std::vector<std::int64_t> age(static_cast<std::size_t>(n));
                 std::vector<std::int64_t> total(static_cast<std::size_t>(n));
                 const std::uint64_t first = c * kRunsPerChunk;
                 const std::uint64_t last = std::min(n_runs, first + kRunsPerChunk);
                 for (std::uint64_t run = first; run < last; ++run) {
                   std::fill(age.begin(), age.end(), 1);
                   std::fill(total.begin(), total.end(), 0);
                   for (int t = 1; t <= horizon; ++t) {
                     for (int i = 0; i < n; ++i) {
                       total[static_cast<std::size_t>(i)] += age[static_cast<std::size_t>(i)];
                       if (options.per_slot) {
                         stats.per_slot[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - 1)]
                             .add(static_cast<double>(age[static_cast<std::size_t>(i)]));
                       }
                     }
                     const SlotOutcome o = sampler.draw(run, t);
                     for (int i = 0; i < n; ++i) {
                       auto& a = age[static_cast<std::size_t>(i)];
                       a = (i == o.user && o.delivered) ? 1 : a + 1;
                     }
                   }
                   double overall = 0;
                   for (int i = 0; i < n; ++i) {
                     const double mean_i =
                         static_cast<double>(total[static_cast<std::size_t>(i)]) / horizon;
                     stats.per_user[static_cast<std::size_t>(i)].add(mean_i);
                     overall += mean_i;
                   }
                   stats.overall.add(overall / n);
                 }
               });

  // merge chunks in index order
  std::vector<Moments> per_user(static_cast<std::size_t>(n));
  Moments overall;
  std::vector<std::vector<Moments>> per_slot;
  if (options.per_slot) {
    per_slot.assign(static_cast<std::size_t>(n), std::vector<Moments>(static_cast<std::size_t>(horizon)));
  }
  for (const auto& chunk : chunks) {
    for (int i = 0; i < n; ++i) per_user[static_cast<std::size_t>(i)].merge(chunk.per_user[static_cast<std::size_t>(i)]);
    overall.merge(chunk.overall);
    if (options.per_slot) {
      for (int i = 0; i < n; ++i) {
        for (int t = 0; t < horizon; ++t) {
          per_slot[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)].merge(
              chunk.per_slot[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)]);
        }
      }
    }
  }

  SimulationReport report;
  report.scheme = scheme;
  report.n_runs = n_runs;
  report.seed = seed;
  report.empirical_overall_mean = overall.mean();
  report.std_error = overall.std_error();
  for (const auto& m : per_user) {
    report.empirical_per_user_mean.push_back(m.mean());
    report.per_user_std_error.push_back(m.std_error());
  }
  report.per_slot = std::move(per_slot);
  return report;
}

RunTrace trace(const SystemConfig& config, const BlockingMatrix& sigma, std::uint64_t seed,
               std::uint64_t run_index, bool subcarrier) {
  check_inputs(config, sigma, 1, subcarrier);
  const SlotSampler sampler(config, sigma, seed);
  const int n = config.n_users();
  RunTrace tr;
  tr.seed = seed;
  tr.run_index = run_index;
  tr.realized_age.assign(static_cast<std::size_t>(n), {});
  std::vector<std::int64_t> age(static_cast<std::size_t>(n), 1);
  for (int t = 1; t <= config.horizon(); ++t) {
    for (int i = 0; i < n; ++i) tr.realized_age[static_cast<std::size_t>(i)].push_back(age[static_cast<std::size_t>(i)]);
    const SlotOutcome o = sampler.draw(run_index, t);
    tr.per_slot_choice.push_back({o.user + 1, o.subcarrier});
    for (int i = 0; i < n; ++i) {
      auto& a = age[static_cast<std::size_t>(i)];
      a = (i == o.user && o.delivered) ? 1 : a + 1;
    }
  }
  return tr;
}

}  // namespace

RunTrace trace_randomized(const SystemConfig& config, const BlockingMatrix& sigma,
                          std::uint64_t seed, std::uint64_t run_index) {
  return trace(config, sigma, seed, run_index, false);
}

RunTrace trace_randomized_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                                     std::uint64_t seed, std::uint64_t run_index) {
  return trace(config, sigma, seed, run_index, true);
}

SimulationReport simulate_randomized(const SystemConfig& config, const BlockingMatrix& sigma,
                                     std::uint64_t n_runs, std::uint64_t seed,
                                     const SimOptions& options) {
  return simulate(config, sigma, n_runs, seed, options, Scheme::randomized);
}

SimulationReport simulate_randomized_subcarrier(const SystemConfig& config,
                                                const BlockingMatrix& sigma, std::uint64_t n_runs,
                                                std::uint64_t seed, const SimOptions& options) {
  return simulate(config, sigma, n_runs, seed, options, Scheme::randomized_subcarrier);
}

int round_robin_user(int n_users, int slot) { return ((slot - 1) % n_users) + 1; }

BlockingMatrix round_robin_worst_case_matrix(const SystemConfig& config, std::optional<int> start) {
  if (config.subcarrier_model()) {
    throw std::invalid_argument("round robin uses the single-channel model");
  }
  const int horizon = config.horizon();
  const int block = config.budget();
  const int first = start.value_or((horizon - block) / 2 + 1);
  if (block > 0 && (first < 1 || first + block - 1 > horizon)) {
    throw std::out_of_range("worst-case block does not fit in the horizon");
  }
  std::vector<std::vector<std::uint8_t>> rows(
      static_cast<std::size_t>(config.n_users()),
      std::vector<std::uint8_t>(static_cast<std::size_t>(horizon), 1));
  for (int t = first; t < first + block; ++t) {
    rows[static_cast<std::size_t>(round_robin_user(config.n_users(), t) - 1)]
        [static_cast<std::size_t>(t - 1)] = 0;
  }
  return BlockingMatrix::from_rows(rows);
}

std::vector<std::vector<std::int64_t>> round_robin_ages(const SystemConfig& config,
                                                        const BlockingMatrix& sigma) {
  if (config.subcarrier_model()) {
    throw std::invalid_argument("round robin uses the single-channel model");
  }
  require_feasible(config, sigma);
  const int n = config.n_users();
  std::vector<std::vector<std::int64_t>> ages(static_cast<std::size_t>(n));
  std::vector<std::int64_t> age(static_cast<std::size_t>(n), 1);
  for (int t = 1; t <= config.horizon(); ++t) {
    for (int i = 0; i < n; ++i) ages[static_cast<std::size_t>(i)].push_back(age[static_cast<std::size_t>(i)]);
    const int served = round_robin_user(n, t);
    for (int i = 1; i <= n; ++i) {
      auto& a = age[static_cast<std::size_t>(i - 1)];
      a = (i == served && sigma.at(i, t) == 1) ? 1 : a + 1;
    }
  }
  return ages;
}

SimulationReport simulate_round_robin(const SystemConfig& config,
                                      const RoundRobinAdversary& adversary, std::uint64_t n_runs,
                                      std::uint64_t seed) {
  (void)n_runs;
  const BlockingMatrix sigma = std::visit(
      [&](const auto& adv) -> BlockingMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(adv)>, WorstCaseAdversary>) {
          return round_robin_worst_case_matrix(config, adv.start);
        } else {
          return adv;
        }
      },
      adversary);
  const auto ages = round_robin_ages(config, sigma);
  SimulationReport report;
  report.scheme = Scheme::round_robin;
  report.n_runs = 1;
  report.seed = seed;
  double overall = 0;
  for (const auto& seq : ages) {
    std::int64_t sum = 0;
    for (auto a : seq) sum += a;
    const double mean = static_cast<double>(sum) / config.horizon();
    report.empirical_per_user_mean.push_back(mean);
    report.per_user_std_error.push_back(0.0);
    overall += mean;
  }
  report.empirical_overall_mean = overall / config.n_users();
  return report;
}

ExactComparison empirical_vs_exact(const SystemConfig& config, const BlockingMatrix& sigma,
                                   std::uint64_t n_runs, std::uint64_t seed, int workers) {
  const AgeTrajectory exact = expected_age(config, sigma, Indexing::raw);
  SimOptions options{workers, true};
  const SimulationReport report =
      config.subcarrier_model() ? simulate_randomized_subcarrier(config, sigma, n_runs, seed, options)
                                : simulate_randomized(config, sigma, n_runs, seed, options);
  ExactComparison cmp;
  cmp.deviation.assign(static_cast<std::size_t>(config.n_users()),
                       std::vector<double>(static_cast<std::size_t>(config.horizon()), 0.0));
  for (int i = 1; i <= config.n_users(); ++i) {
    for (int t = 1; t <= config.horizon(); ++t) {
      const Moments& m = report.per_slot[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t - 1)];
      const double diff = std::abs(m.mean() - to_double(exact.at(i, t)));
      const double se = m.std_error();
      double z = 0;
      if (se > 0) {
        z = diff / se;
      } else if (diff > 1e-12) {
        z = std::numeric_limits<double>::infinity();
      }
      cmp.deviation[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t - 1)] = z;
      if (cmp.worst_user == 0 || z > cmp.max_standardized_deviation) {
        cmp.max_standardized_deviation = z;
        cmp.worst_user = i;
        cmp.worst_slot = t;
      }
    }
  }
  cmp.flagged = cmp.max_standardized_deviation > ExactComparison::flag_threshold;
  return cmp;
}

std::vector<std::int64_t> inter_success_gaps(const RunTrace& trace, int user) {
  const auto& ages = trace.realized_age.at(static_cast<std::size_t>(user - 1));
  std::vector<std::int64_t> gaps;
  std::optional<std::size_t> previous;
  // a(t) = 1 for t >= 2 means the update in slot t-1 got through.
  for (std::size_t t = 1; t < ages.size(); ++t) {
    if (ages[t] != 1) continue;
    if (previous) gaps.push_back(static_cast<std::int64_t>(t - *previous));
    previous = t;
  }
  return gaps;
}

}  // namespace aoiadv
