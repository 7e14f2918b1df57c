#pragma once

// Empirical ratio reports and their JSON / CSV serializations.
//
// JSON: {"id", "seed", "config", "resolutions": [{"N", "max", "median",
//        "skipped", "trials": [{"trial", "seed", "ratio"}, ...]}, ...],
//        "max", "median", "hash", "wall_time_s"}
// CSV:  id,N,trial,seed,ratio   (one row per evaluated trial)
// Numbers are written with 17 significant digits. "hash" covers everything
// except wall_time_s.

#include <cstdint>
#include <string>
#include <vector>

namespace cmlab {

struct TrialRatio {
  int trial = 0;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

struct ResolutionEntry {
  int N = 0;
  std::vector<TrialRatio> trials;
  int skipped = 0;
  double max = 0.0;
  double median = 0.0;
};

struct RatioReport {
  std::string id;
  std::uint64_t seed = 0;
  std::string config;  // canonical JSON echo
  std::vector<ResolutionEntry> resolutions;
  double max = 0.0;
  double median = 0.0;
  double wall_time_s = 0.0;

  /// Recomputes per-resolution and overall max / median from the trials.
  void finalize();
  /// M(N_{i+1}) / M(N_i) - 1 for consecutive resolutions.
  std::vector<double> growth() const;
};

std::string to_json(const RatioReport& r);
std::string to_csv(const RatioReport& r);
RatioReport report_from_json(const std::string& text);
/// Rebuilds trials and per-resolution statistics; config and wall time are lost.
RatioReport report_from_csv(const std::string& text);

/// FNV-1a over the canonical JSON without the wall time.
std::uint64_t report_hash(const RatioReport& r);

std::string format_double(double v);

}  // namespace cmlab
