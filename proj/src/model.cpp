#include "aoiadv/model.hpp"

#include <algorithm>
#include <sstream>

namespace aoiadv {

SystemConfig::SystemConfig(int n_users, int horizon, Rational alpha,
                           std::optional<int> n_subcarriers)
    : n_users_(n_users),
      horizon_(horizon),
      alpha_(std::move(alpha)),
      n_subcarriers_(n_subcarriers),
      budget_(0) {
  if (n_users_ < 1) throw std::invalid_argument("n_users must be >= 1");
  if (horizon_ < 1) throw std::invalid_argument("horizon must be >= 1");
  if (alpha_ < 0 || alpha_ > 1) throw std::invalid_argument("alpha must lie in [0,1]");
  if (n_subcarriers_ && *n_subcarriers_ < 2) {
    throw std::invalid_argument("n_subcarriers must be >= 2");
  }
  budget_ = static_cast<int>(floor_to_int(alpha_ * horizon_));
}

SystemConfig SystemConfig::with_budget(int n_users, int horizon, int budget,
                                       std::optional<int> n_subcarriers) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (budget < 0 || budget > horizon) throw std::invalid_argument("budget must lie in [0, horizon]");
  return SystemConfig(n_users, horizon, Rational(budget, horizon), n_subcarriers);
}

BlockingMatrix BlockingMatrix::all_ones(int rows, int horizon) {
  if (rows < 1 || horizon < 1) throw ShapeError("blocking matrix needs positive shape");
  return BlockingMatrix(rows, horizon,
                        std::vector<std::uint8_t>(static_cast<std::size_t>(rows * horizon), 1));
}

BlockingMatrix BlockingMatrix::from_rows(const std::vector<std::vector<std::uint8_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ShapeError("blocking matrix needs positive shape");
  const int horizon = static_cast<int>(rows.front().size());
  std::vector<std::uint8_t> entries;
  entries.reserve(rows.size() * rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != horizon) throw ShapeError("ragged blocking matrix");
    for (auto v : r) {
      if (v > 1) throw ShapeError("blocking entries must be 0 or 1");
      entries.push_back(v);
    }
  }
  return BlockingMatrix(static_cast<int>(rows.size()), horizon, std::move(entries));
}

BlockingMatrix BlockingMatrix::with(int row, int slot, std::uint8_t value) const {
  if (row < 1 || row > rows_ || slot < 1 || slot > horizon_) {
    throw std::out_of_range("blocking matrix index out of range");
  }
  if (value > 1) throw ShapeError("blocking entries must be 0 or 1");
  BlockingMatrix copy = *this;
  copy.entries_[static_cast<std::size_t>((row - 1) * horizon_ + (slot - 1))] = value;
  return copy;
}

int BlockingMatrix::zero_count() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), std::uint8_t{0}));
}

int BlockingMatrix::column_zero_count(int slot) const {
  int zeros = 0;
  for (int r = 1; r <= rows_; ++r) zeros += at(r, slot) == 0 ? 1 : 0;
  return zeros;
}

std::string Feasibility::describe() const {
  if (feasible()) return "feasible";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) os << "; ";
    first = false;
    if (v.kind == Violation::Kind::budget) {
      os << "budget exceeded: " << v.zeros << " blocked slots > budget " << v.limit;
    } else {
      os << "slot " << v.slot << " blocks " << v.zeros << " rows (at most " << v.limit << ")";
    }
  }
  return os.str();
}

Feasibility validate(const SystemConfig& config, const BlockingMatrix& sigma) {
  if (sigma.rows() != config.rows() || sigma.horizon() != config.horizon()) {
    std::ostringstream os;
    os << "blocking matrix is " << sigma.rows() << "x" << sigma.horizon() << ", expected "
       << config.rows() << "x" << config.horizon();
    throw ShapeError(os.str());
  }
  Feasibility verdict;
  verdict.total_zeros = sigma.zero_count();
  if (verdict.total_zeros > config.budget()) {
    verdict.budget_ok = false;
    verdict.violations.push_back({Violation::Kind::budget, 0, verdict.total_zeros, config.budget()});
  }
  for (int t = 1; t <= sigma.horizon(); ++t) {
    if (int z = sigma.column_zero_count(t); z > 1) {
      verdict.columns_ok = false;
      verdict.violations.push_back({Violation::Kind::column, t, z, 1});
    }
  }
  return verdict;
}

void require_feasible(const SystemConfig& config, const BlockingMatrix& sigma) {
  if (auto verdict = validate(config, sigma); !verdict.feasible()) {
    throw InfeasibleError(verdict.describe());
  }
}

BlockingMatrix cbs_to_matrix(const SystemConfig& config, const CbsDescriptor& d) {
  if (d.row < 1 || d.row > config.rows()) throw std::out_of_range("CBS row out of range");
  if (d.length < 0) throw std::out_of_range("CBS length must be non-negative");
  if (d.length > 0 && (d.start < 1 || d.end() > config.horizon())) {
    throw std::out_of_range("CBS overruns the horizon");
  }
  if (d.length > config.budget()) {
    throw std::invalid_argument("CBS length " + std::to_string(d.length) + " exceeds budget " +
                                std::to_string(config.budget()));
  }
  std::vector<std::vector<std::uint8_t>> rows(
      static_cast<std::size_t>(config.rows()),
      std::vector<std::uint8_t>(static_cast<std::size_t>(config.horizon()), 1));
  for (int t = d.start; t <= d.end(); ++t) {
    rows[static_cast<std::size_t>(d.row - 1)][static_cast<std::size_t>(t - 1)] = 0;
  }
  return BlockingMatrix::from_rows(rows);
}

}  // namespace aoiadv
