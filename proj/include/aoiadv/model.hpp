#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aoiadv/rational.hpp"

namespace aoiadv {

// Matrix shape does not fit the configuration.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A blocking matrix violates the budget or the one-block-per-slot rule.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Horizon, user count, adversary budget fraction and, for the sub-carrier
/// model, the number of sub-carriers. Immutable once constructed.
class SystemConfig {
 public:
  /// Throws std::invalid_argument when n_users < 1, horizon < 1, alpha is
  /// outside [0,1] or n_subcarriers < 2.
  SystemConfig(int n_users, int horizon, Rational alpha,
               std::optional<int> n_subcarriers = std::nullopt);

  /// Config whose budget is exactly `budget` slots (alpha = budget / horizon).
  static SystemConfig with_budget(int n_users, int horizon, int budget,
                                  std::optional<int> n_subcarriers = std::nullopt);

  int n_users() const { return n_users_; }
  int horizon() const { return horizon_; }
  const Rational& alpha() const { return alpha_; }
  std::optional<int> n_subcarriers() const { return n_subcarriers_; }
  bool subcarrier_model() const { return n_subcarriers_.has_value(); }

  /// floor(alpha * horizon).
  int budget() const { return budget_; }

  /// Rows of a blocking matrix: users, or sub-carriers in the sub-carrier model.
  int rows() const { return n_subcarriers_ ? *n_subcarriers_ : n_users_; }

 private:
  int n_users_;
  int horizon_;
  Rational alpha_;
  std::optional<int> n_subcarriers_;
  int budget_;
};

/// Binary rows x horizon matrix; entry (row, slot) is 0 when the adversary
/// blocks that row in that slot. Rows and slots are 1-based.
class BlockingMatrix {
 public:
  BlockingMatrix() = default;

  static BlockingMatrix all_ones(int rows, int horizon);
  /// Throws ShapeError on ragged rows or entries other than 0/1.
  static BlockingMatrix from_rows(const std::vector<std::vector<std::uint8_t>>& rows);

  int rows() const { return rows_; }
  int horizon() const { return horizon_; }

  std::uint8_t at(int row, int slot) const {
    return entries_[static_cast<std::size_t>((row - 1) * horizon_ + (slot - 1))];
  }
  std::span<const std::uint8_t> row(int row) const {
    return {entries_.data() + static_cast<std::size_t>((row - 1) * horizon_),
            static_cast<std::size_t>(horizon_)};
  }

  /// Copy with entry (row, slot) replaced.
  BlockingMatrix with(int row, int slot, std::uint8_t value) const;

  int zero_count() const;
  int column_zero_count(int slot) const;

  auto operator<=>(const BlockingMatrix&) const = default;

 private:
  BlockingMatrix(int rows, int horizon, std::vector<std::uint8_t> entries)
      : rows_(rows), horizon_(horizon), entries_(std::move(entries)) {}

  int rows_ = 0;
  int horizon_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// One contiguous run of zeros on a single row.
struct CbsDescriptor {
  int row = 1;
  int start = 1;  ///< first blocked slot, 1-based
  int length = 0;

  int end() const { return start + length - 1; }
  int left_ones() const { return start - 1; }
  int right_ones(int horizon) const { return horizon - end(); }

  bool operator==(const CbsDescriptor&) const = default;
};

struct Violation {
  enum class Kind { budget, column };
  Kind kind;
  int slot = 0;   ///< offending column for Kind::column
  int zeros = 0;  ///< zeros counted (total or in the column)
  int limit = 0;
};

struct Feasibility {
  bool budget_ok = true;
  bool columns_ok = true;
  int total_zeros = 0;
  std::vector<Violation> violations;

  bool feasible() const { return budget_ok && columns_ok; }
  std::string describe() const;
};

/// Checks both adversary constraints. Throws ShapeError when the matrix shape
/// does not match the configuration.
Feasibility validate(const SystemConfig& config, const BlockingMatrix& sigma);

/// Throws InfeasibleError (with the description) unless sigma is feasible.
void require_feasible(const SystemConfig& config, const BlockingMatrix& sigma);

/// Throws std::out_of_range for a descriptor that leaves the matrix and
/// std::invalid_argument when length exceeds the budget.
BlockingMatrix cbs_to_matrix(const SystemConfig& config, const CbsDescriptor& d);

}  // namespace aoiadv
