#include "aoiadv/exact_age.hpp"

#include <stdexcept>

namespace aoiadv {

AgeTrajectory::AgeTrajectory(std::vector<std::vector<Rational>> raw_per_user, Indexing indexing)
    : raw_(std::move(raw_per_user)), horizon_(0), indexing_(indexing) {
  if (raw_.empty() || raw_.front().size() < 2) {
    throw std::invalid_argument("trajectory needs at least one user and one slot");
  }
  horizon_ = static_cast<int>(raw_.front().size()) - 1;
  for (const auto& seq : raw_) {
    if (static_cast<int>(seq.size()) != horizon_ + 1) {
      throw std::invalid_argument("ragged trajectory");
    }
  }
}

const Rational& AgeTrajectory::at(int user, int slot) const {
  if (slot < 1 || slot > horizon_) throw std::out_of_range("slot out of range");
  return raw_at(user, indexing_ == Indexing::shifted ? slot + 1 : slot);
}

const Rational& AgeTrajectory::raw_at(int user, int t) const {
  if (user < 1 || user > n_users()) throw std::out_of_range("user out of range");
  if (t < 1 || t > horizon_ + 1) throw std::out_of_range("time out of range");
  return raw_[static_cast<std::size_t>(user - 1)][static_cast<std::size_t>(t - 1)];
}

Rational AgeTrajectory::per_user_total(int user) const {
  Rational sum = 0;
  for (int t = 1; t <= horizon_; ++t) sum += at(user, t);
  return sum;
}

Rational AgeTrajectory::per_user_mean(int user) const {
  return per_user_total(user) / horizon_;
}

Rational AgeTrajectory::overall_mean() const {
  Rational sum = 0;
  for (int i = 1; i <= n_users(); ++i) sum += per_user_total(i);
  return sum / (Rational(horizon_) * n_users());
}

namespace {

void require_single_channel(const SystemConfig& config, const BlockingMatrix& sigma) {
  if (config.subcarrier_model()) {
    throw std::invalid_argument("configuration uses the sub-carrier model");
  }
  require_feasible(config, sigma);
}

void require_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma) {
  if (!config.subcarrier_model()) {
    throw std::invalid_argument("configuration lacks n_subcarriers");
  }
  require_feasible(config, sigma);
}

// Multiplier of the recursion for slot t given the per-slot factor rule.
std::vector<Rational> subcarrier_factors(const SystemConfig& config, const BlockingMatrix& sigma) {
  const int n = config.n_users();
  const int n_sub = *config.n_subcarriers();
  std::vector<Rational> factors;
  factors.reserve(static_cast<std::size_t>(config.horizon()));
  for (int t = 1; t <= config.horizon(); ++t) {
    int unblocked = 0;
    for (int k = 1; k <= n_sub; ++k) unblocked += sigma.at(k, t);
    factors.emplace_back(1 - Rational(unblocked, n * n_sub));
  }
  return factors;
}

std::vector<Rational> raw_by_recursion(std::span<const Rational> factors) {
  std::vector<Rational> raw;
  raw.reserve(factors.size() + 1);
  raw.emplace_back(1);
  for (const auto& f : factors) raw.emplace_back(raw.back() * f + 1);
  return raw;
}

std::vector<Rational> raw_by_trains(std::span<const Rational> factors) {
  std::vector<Rational> raw;
  raw.reserve(factors.size() + 1);
  raw.emplace_back(1);
  const int horizon = static_cast<int>(factors.size());
  for (int t = 1; t <= horizon; ++t) {
    // Trains ending at t, built from the right: Gamma(l,t) = f(l) Gamma(l+1,t).
    Rational train = 1;
    Rational sum = 0;
    for (int l = t; l >= 1; --l) {
      train *= factors[static_cast<std::size_t>(l - 1)];
      sum += train;
    }
    raw.emplace_back(sum + 1);
  }
  return raw;
}

std::vector<Rational> row_factors(int n_users, std::span<const std::uint8_t> row) {
  const Rational unblocked(n_users - 1, n_users);
  std::vector<Rational> factors;
  factors.reserve(row.size());
  for (auto s : row) factors.emplace_back(s ? unblocked : Rational(1));
  return factors;
}

template <typename RawFn>
AgeTrajectory single_channel(const SystemConfig& config, const BlockingMatrix& sigma,
                             Indexing indexing, RawFn raw_fn) {
  require_single_channel(config, sigma);
  std::vector<std::vector<Rational>> raw;
  raw.reserve(static_cast<std::size_t>(config.n_users()));
  for (int i = 1; i <= config.n_users(); ++i) {
    raw.push_back(raw_fn(row_factors(config.n_users(), sigma.row(i))));
  }
  return {std::move(raw), indexing};
}

template <typename RawFn>
AgeTrajectory subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                         Indexing indexing, RawFn raw_fn) {
  require_subcarrier(config, sigma);
  auto shared = raw_fn(subcarrier_factors(config, sigma));
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(config.n_users()), shared);
  return {std::move(raw), indexing};
}

}  // namespace

AgeTrajectory age_by_recursion(const SystemConfig& config, const BlockingMatrix& sigma,
                               Indexing indexing) {
  return single_channel(config, sigma, indexing,
                        [](const std::vector<Rational>& f) { return raw_by_recursion(f); });
}

AgeTrajectory age_by_trains(const SystemConfig& config, const BlockingMatrix& sigma,
                            Indexing indexing) {
  return single_channel(config, sigma, indexing,
                        [](const std::vector<Rational>& f) { return raw_by_trains(f); });
}

Rational train_value(const SystemConfig& config, std::span<const std::uint8_t> sigma_row, int k,
                     int l) {
  if (k < 1 || k > l || l > static_cast<int>(sigma_row.size())) {
    throw std::invalid_argument("train bounds must satisfy 1 <= k <= l <= T");
  }
  const Rational unblocked(config.n_users() - 1, config.n_users());
  Rational value = 1;
  for (int j = k; j <= l; ++j) {
    if (sigma_row[static_cast<std::size_t>(j - 1)]) value *= unblocked;
  }
  return value;
}

AgeTrajectory age_by_recursion_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                                          Indexing indexing) {
  return subcarrier(config, sigma, indexing,
                    [](const std::vector<Rational>& f) { return raw_by_recursion(f); });
}

AgeTrajectory age_by_trains_subcarrier(const SystemConfig& config, const BlockingMatrix& sigma,
                                       Indexing indexing) {
  require_subcarrier(config, sigma);
  std::vector<Rational> raw;
  raw.reserve(static_cast<std::size_t>(config.horizon() + 1));
  raw.emplace_back(1);
  for (int t = 1; t <= config.horizon(); ++t) {
    Rational sum = 0;
    for (int l = 1; l <= t; ++l) sum += subcarrier_train_value(config, sigma, l, t);
    raw.emplace_back(sum + 1);
  }
  std::vector<std::vector<Rational>> per_user(static_cast<std::size_t>(config.n_users()), raw);
  return {std::move(per_user), indexing};
}

Rational subcarrier_train_value(const SystemConfig& config, const BlockingMatrix& sigma, int k,
                                int l) {
  if (!config.subcarrier_model()) throw std::invalid_argument("configuration lacks n_subcarriers");
  if (k < 1 || k > l || l > sigma.horizon()) {
    throw std::invalid_argument("train bounds must satisfy 1 <= k <= l <= T");
  }
  const int n = config.n_users();
  const int n_sub = *config.n_subcarriers();
  const Rational open(n - 1, n);
  const Rational jammed = 1 - Rational(n_sub - 1, n * n_sub);
  Rational value = 1;
  for (int j = k; j <= l; ++j) {
    value *= sigma.column_zero_count(j) == 0 ? open : jammed;
  }
  return value;
}

AgeTrajectory expected_age(const SystemConfig& config, const BlockingMatrix& sigma,
                           Indexing indexing) {
  return config.subcarrier_model() ? age_by_recursion_subcarrier(config, sigma, indexing)
                                   : age_by_recursion(config, sigma, indexing);
}

Rational objective(const SystemConfig& config, const AgeTrajectory& trajectory) {
  if (trajectory.horizon() != config.horizon() || trajectory.n_users() != config.n_users()) {
    throw std::invalid_argument("trajectory does not match configuration");
  }
  return trajectory.overall_mean();
}

Rational row_total_age(int n_users, std::span<const std::uint8_t> row, Indexing indexing) {
  if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
  auto raw = raw_by_recursion(row_factors(n_users, row));
  Rational sum = 0;
  const std::size_t first = indexing == Indexing::shifted ? 1 : 0;
  for (std::size_t t = first; t < first + row.size(); ++t) sum += raw[t];
  return sum;
}

}  // namespace aoiadv
