#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aoiadv/exact_age.hpp"
#include "aoiadv/model.hpp"
#include "aoiadv/rational.hpp"

namespace aoiadv {

using BlockingRow = std::vector<std::uint8_t>;

/// Maximal run of zeros, 1-based inclusive slots.
struct ZeroBlock {
  int start;
  int end;
  int length() const { return end - start + 1; }
  bool operator==(const ZeroBlock&) const = default;
};

std::vector<ZeroBlock> zero_blocks(std::span<const std::uint8_t> row);

/// The row's single zero block as a descriptor (row index `row_index`), or
/// nullopt when the row has no zeros or more than one block.
std::optional<CbsDescriptor> as_cbs(std::span<const std::uint8_t> row, int row_index = 1);

/// Time reversal. Swaps L and R of a CBS row.
BlockingRow reverse_sequence(std::span<const std::uint8_t> row);

enum class Direction { left, right };

/// Moves the block one slot; throws std::out_of_range when it would leave
/// slots 1..horizon.
CbsDescriptor shift_cbs(int horizon, const CbsDescriptor& d, Direction direction);

/// Direction that brings |L-R| closer to zero, or nullopt once |L-R| <= 1.
std::optional<Direction> centering_direction(int horizon, const CbsDescriptor& d);

/// CBS with L = floor((T-length)/2), i.e. |L-R| <= 1 with the odd case
/// placed left (L = R-1). Throws std::out_of_range when length > horizon.
CbsDescriptor centered_cbs(int horizon, int row, int length);
/// As above, additionally requiring length <= config.budget().
CbsDescriptor centered_cbs(const SystemConfig& config, int row, int length);

enum class MergeCase {
  right_block_left,  ///< ones left of the right block minus left length > R
  left_block_right,  ///< otherwise
};

struct MergeStep {
  BlockingRow row;
  MergeCase fired;
};

/// One move of the two-block merging argument: with left block length lbar,
/// right block [c..d] and R = T - d, the right block moves left when
/// (c - 1) - lbar > R, else the left block moves right.
/// Throws std::invalid_argument unless the row has exactly two zero blocks.
MergeStep merge_step(std::span<const std::uint8_t> row);

/// Every row visited while merging a two-block row into one CBS and then
/// centering it, with the per-user total age (shifted indexing) of each.
struct MergePath {
  std::vector<BlockingRow> rows;   ///< rows.front() is the input
  std::vector<Rational> totals;    ///< row_total_age of rows[k]
  std::vector<std::optional<MergeCase>> steps;  ///< nullopt marks a centering shift
};

MergePath merge_to_centered(int n_users, std::span<const std::uint8_t> row);

/// Thrown when an exhaustive search would exceed its enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

struct BruteForceOptions {
  std::uint64_t cap = 100'000'000;  ///< limit on (rows+1)^T
  int workers = 0;                  ///< 0: see worker_count()
  Indexing indexing = Indexing::shifted;
};

/// All feasible matrices that attain the largest objective.
struct MaximizerSet {
  Rational best_value;
  std::vector<BlockingMatrix> maximizers;  ///< sorted ascending
  std::uint64_t enumerated_count = 0;
};

/// Exhaustive search over every feasible blocking matrix (per column: no
/// block or block one row; at most budget zeros). The sub-carrier model is
/// used when the configuration has n_subcarriers. Throws CapExceeded when
/// (rows+1)^T exceeds options.cap.
MaximizerSet brute_force_optimum(const SystemConfig& config, const BruteForceOptions& options = {});

/// beta^(a-b) - beta^a <= beta^(c-b) - beta^c, evaluated exactly with 0^0 = 1.
/// Throws std::invalid_argument when beta is outside [0,1] or c >= a, and
/// std::domain_error for beta = 0 with a negative exponent.
bool lemma6_check(const Rational& beta, int a, int b, int c);

/// Single-row consecutive block of a matrix: all zeros lie on one row and are
/// contiguous. nullopt otherwise (including the all-ones matrix).
std::optional<CbsDescriptor> single_row_cbs(const BlockingMatrix& sigma);

/// Per slot, whether any row is blocked.
std::vector<bool> blocked_slots(const BlockingMatrix& sigma);

}  // namespace aoiadv
