#pragma once

// The nine acceptance criteria, shared by the acceptance test binary and
// `cmlab verify --all`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cmlab {

struct AcceptanceOptions {
  int sweep_trials = 200;
  int pair_trials = 100;
  std::vector<int> resolutions{256, 512, 1024};
  std::uint64_t seed = 20240611;
  double max_drift = 0.10;
  double min_negative_growth = 0.25;
};

struct CriterionResult {
  int index = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0.0;
};

int criterion_count();
std::string criterion_title(int index);
CriterionResult run_criterion(int index, const AcceptanceOptions& opts = {});

/// Runs criteria 1..9 in order; `on_result` sees each one as it finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "criterion 3 PASS quadratic estimate (0.8s)"
std::string summary_line(const CriterionResult& r);

}  // namespace cmlab
