#include "aoiadv/adversary.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "aoiadv/parallel.hpp"

namespace aoiadv {

std::vector<ZeroBlock> zero_blocks(std::span<const std::uint8_t> row) {
  std::vector<ZeroBlock> blocks;
  const int horizon = static_cast<int>(row.size());
  for (int t = 1; t <= horizon;) {
    if (row[static_cast<std::size_t>(t - 1)] == 0) {
      int end = t;
      while (end < horizon && row[static_cast<std::size_t>(end)] == 0) ++end;
      blocks.push_back({t, end});
      t = end + 1;
    } else {
      ++t;
    }
  }
  return blocks;
}

std::optional<CbsDescriptor> as_cbs(std::span<const std::uint8_t> row, int row_index) {
  auto blocks = zero_blocks(row);
  if (blocks.size() != 1) return std::nullopt;
  return CbsDescriptor{row_index, blocks.front().start, blocks.front().length()};
}

BlockingRow reverse_sequence(std::span<const std::uint8_t> row) {
  return {row.rbegin(), row.rend()};
}

CbsDescriptor shift_cbs(int horizon, const CbsDescriptor& d, Direction direction) {
  CbsDescriptor moved = d;
  moved.start += direction == Direction::right ? 1 : -1;
  if (moved.start < 1 || moved.end() > horizon) {
    throw std::out_of_range("shift moves the block off the horizon");
  }
  return moved;
}

std::optional<Direction> centering_direction(int horizon, const CbsDescriptor& d) {
  const int left = d.left_ones();
  const int right = d.right_ones(horizon);
  if (right - left >= 2) return Direction::right;
  if (left - right >= 2) return Direction::left;
  return std::nullopt;
}

CbsDescriptor centered_cbs(int horizon, int row, int length) {
  if (length < 0 || length > horizon) throw std::out_of_range("CBS length exceeds the horizon");
  return CbsDescriptor{row, (horizon - length) / 2 + 1, length};
}

CbsDescriptor centered_cbs(const SystemConfig& config, int row, int length) {
  if (length > config.budget() && length <= config.horizon()) {
    throw std::invalid_argument("CBS length exceeds the budget");
  }
  return centered_cbs(config.horizon(), row, length);
}

MergeStep merge_step(std::span<const std::uint8_t> row) {
  auto blocks = zero_blocks(row);
  if (blocks.size() != 2) throw std::invalid_argument("row must contain exactly two zero blocks");
  const int horizon = static_cast<int>(row.size());
  const ZeroBlock& left = blocks[0];
  const ZeroBlock& right = blocks[1];
  const int ones_left_of_right = (right.start - 1) - left.length();
  const int ones_right = horizon - right.end;

  BlockingRow out(row.begin(), row.end());
  auto at = [&](int slot) -> std::uint8_t& { return out[static_cast<std::size_t>(slot - 1)]; };
  if (ones_left_of_right > ones_right) {
    at(right.start - 1) = 0;
    at(right.end) = 1;
    return {std::move(out), MergeCase::right_block_left};
  }
  at(left.end + 1) = 0;
  at(left.start) = 1;
  return {std::move(out), MergeCase::left_block_right};
}

MergePath merge_to_centered(int n_users, std::span<const std::uint8_t> row) {
  if (zero_blocks(row).size() != 2) {
    throw std::invalid_argument("row must contain exactly two zero blocks");
  }
  MergePath path;
  path.rows.emplace_back(row.begin(), row.end());
  path.totals.push_back(row_total_age(n_users, row));
  while (zero_blocks(path.rows.back()).size() == 2) {
    auto step = merge_step(path.rows.back());
    path.totals.push_back(row_total_age(n_users, step.row));
    path.rows.push_back(std::move(step.row));
    path.steps.emplace_back(step.fired);
  }
  const int horizon = static_cast<int>(row.size());
  auto cbs = *as_cbs(path.rows.back());
  while (auto dir = centering_direction(horizon, cbs)) {
    cbs = shift_cbs(horizon, cbs, *dir);
    BlockingRow next(row.size(), 1);
    std::fill_n(next.begin() + (cbs.start - 1), cbs.length, std::uint8_t{0});
    path.totals.push_back(row_total_age(n_users, next));
    path.rows.push_back(std::move(next));
    path.steps.emplace_back(std::nullopt);
  }
  return path;
}

namespace {

std::uint64_t saturating_power(std::uint64_t base, int exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > limit / base) return std::numeric_limits<std::uint64_t>::max();
    value *= base;
  }
  return value;
}

// Depth-first enumeration over columns. choice[t] = 0 leaves slot t open,
// choice[t] = r blocks row r. The per-row expected age is advanced one column
// per level.
class Enumerator {
 public:
  Enumerator(const SystemConfig& config, Indexing indexing)
      : config_(config),
        indexing_(indexing),
        horizon_(config.horizon()),
        rows_(config.rows()),
        subcarrier_(config.subcarrier_model()) {
    const int n = config.n_users();
    if (subcarrier_) {
      const int n_sub = *config.n_subcarriers();
      open_factor_ = Rational(n - 1, n);
      jammed_factor_ = 1 - Rational(n_sub - 1, n * n_sub);
      tracks_ = 1;
    } else {
      open_factor_ = Rational(n - 1, n);
      jammed_factor_ = 1;
      tracks_ = n;
    }
    // Objective = total / (T * tracks), where tracks is 1 in the sub-carrier
    // model (all users share one trajectory).
    scale_ = Rational(1, horizon_) / tracks_;
    levels_.resize(static_cast<std::size_t>(horizon_ + 1));
    levels_[0].delta.assign(static_cast<std::size_t>(tracks_), Rational(1));
    levels_[0].total = 0;
    choice_.assign(static_cast<std::size_t>(horizon_), 0);
  }

  MaximizerSet run_with_first(int first_choice) {
    result_ = MaximizerSet{};
    have_best_ = false;
    if (first_choice > 0 && config_.budget() == 0) return result_;
    descend(0, first_choice, config_.budget());
    return std::move(result_);
  }

 private:
  struct Level {
    std::vector<Rational> delta;
    Rational total;
  };

  void descend(int column, int choice, int remaining) {
    const Level& prev = levels_[static_cast<std::size_t>(column)];
    Level& next = levels_[static_cast<std::size_t>(column + 1)];
    next.delta.resize(prev.delta.size());
    next.total = prev.total;
    for (int k = 0; k < tracks_; ++k) {
      const Rational& d = prev.delta[static_cast<std::size_t>(k)];
      bool jammed = subcarrier_ ? choice != 0 : choice == k + 1;
      Rational& out = next.delta[static_cast<std::size_t>(k)];
      out = d * (jammed ? jammed_factor_ : open_factor_) + 1;
      next.total += indexing_ == Indexing::shifted ? out : d;
    }
    choice_[static_cast<std::size_t>(column)] = choice;
    const int left = remaining - (choice != 0 ? 1 : 0);
    if (column + 1 == horizon_) {
      record(next.total * scale_);
      return;
    }
    descend(column + 1, 0, left);
    if (left > 0) {
      for (int r = 1; r <= rows_; ++r) descend(column + 1, r, left);
    }
  }

  void record(const Rational& value) {
    ++result_.enumerated_count;
    if (!have_best_ || value > result_.best_value) {
      have_best_ = true;
      result_.best_value = value;
      result_.maximizers.clear();
    } else if (value < result_.best_value) {
      return;
    }
    std::vector<std::vector<std::uint8_t>> grid(
        static_cast<std::size_t>(rows_), std::vector<std::uint8_t>(static_cast<std::size_t>(horizon_), 1));
    for (int t = 0; t < horizon_; ++t) {
      if (int c = choice_[static_cast<std::size_t>(t)]; c != 0) {
        grid[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(t)] = 0;
      }
    }
    result_.maximizers.push_back(BlockingMatrix::from_rows(grid));
  }

  const SystemConfig& config_;
  Indexing indexing_;
  int horizon_;
  int rows_;
  bool subcarrier_;
  int tracks_ = 1;
  Rational open_factor_;
  Rational jammed_factor_;
  Rational scale_;
  std::vector<Level> levels_;
  std::vector<int> choice_;
  MaximizerSet result_;
  bool have_best_ = false;
};

}  // namespace

MaximizerSet brute_force_optimum(const SystemConfig& config, const BruteForceOptions& options) {
  const std::uint64_t size =
      saturating_power(static_cast<std::uint64_t>(config.rows() + 1), config.horizon(), options.cap);
  if (size > options.cap) {
    throw CapExceeded("enumeration size (" + std::to_string(config.rows() + 1) + ")^" +
                          std::to_string(config.horizon()) + " exceeds the cap of " +
                          std::to_string(options.cap),
                      options.cap);
  }
  const auto n_units = static_cast<std::size_t>(config.rows() + 1);
  std::vector<MaximizerSet> partial(n_units);
  parallel_for(n_units, worker_count(options.workers), [&](std::size_t unit) {
    Enumerator enumerator(config, options.indexing);
    partial[unit] = enumerator.run_with_first(static_cast<int>(unit));
  });

  MaximizerSet merged;
  bool have_best = false;
  for (auto& p : partial) {
    merged.enumerated_count += p.enumerated_count;
    if (p.enumerated_count == 0) continue;
    if (!have_best || p.best_value > merged.best_value) {
      have_best = true;
      merged.best_value = p.best_value;
      merged.maximizers = std::move(p.maximizers);
    } else if (p.best_value == merged.best_value) {
      std::move(p.maximizers.begin(), p.maximizers.end(), std::back_inserter(merged.maximizers));
    }
  }
  std::sort(merged.maximizers.begin(), merged.maximizers.end());
  return merged;
}

namespace {

// beta^e for integer e with 0^0 = 1.
Rational int_power(const Rational& beta, int e) {
  if (e >= 0) return pow(beta, static_cast<unsigned>(e));
  if (beta == 0) throw std::domain_error("0 raised to a negative power");
  return 1 / pow(beta, static_cast<unsigned>(-e));
}

}  // namespace

bool lemma6_check(const Rational& beta, int a, int b, int c) {
  if (beta < 0 || beta > 1) throw std::invalid_argument("beta must lie in [0,1]");
  if (c >= a) throw std::invalid_argument("requires c < a");
  const Rational lhs = int_power(beta, a - b) - int_power(beta, a);
  const Rational rhs = int_power(beta, c - b) - int_power(beta, c);
  return lhs <= rhs;
}

std::optional<CbsDescriptor> single_row_cbs(const BlockingMatrix& sigma) {
  std::optional<CbsDescriptor> found;
  for (int r = 1; r <= sigma.rows(); ++r) {
    auto row = sigma.row(r);
    if (std::find(row.begin(), row.end(), std::uint8_t{0}) == row.end()) continue;
    if (found) return std::nullopt;
    found = as_cbs(row, r);
    if (!found) return std::nullopt;
  }
  return found;
}

std::vector<bool> blocked_slots(const BlockingMatrix& sigma) {
  std::vector<bool> blocked(static_cast<std::size_t>(sigma.horizon()), false);
  for (int t = 1; t <= sigma.horizon(); ++t) {
    blocked[static_cast<std::size_t>(t - 1)] = sigma.column_zero_count(t) > 0;
  }
  return blocked;
}

}  // namespace aoiadv
