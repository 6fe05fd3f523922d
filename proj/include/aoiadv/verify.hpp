#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aoiadv {

struct VerifyOptions {
  std::vector<int> users{2, 3};
  std::vector<int> horizons{6, 8, 10};
  std::vector<int> budgets{1, 2, 3};
  std::vector<int> subcarriers{2, 3};
  std::vector<int> subcarrier_horizons{6, 8};
  int max_row_horizon = 12;    ///< single-row checks run for T up to this
  int max_row_users = 5;
  int engine_samples = 200;
  int power_samples = 10'000;
  std::uint64_t seed = 1;
  int workers = 0;
};

struct ClaimResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;  ///< first counterexample, empty when passed
};

/// Runs every structural claim on the configured grid of small instances.
std::vector<ClaimResult> verify_claims(const VerifyOptions& options = {});

}  // namespace aoiadv
