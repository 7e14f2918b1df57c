#pragma once

// Empirical operator-norm ratios for each boundedness statement, one id per
// statement:
//
//   T3.2i        ||T_sigma(f,g)||_{J_w(L^p)} / (||f||_p ||g||_{X_w})        sigma = cfg.symbol
//   T3.2ii       max(||B1||_1, ||B2||_{J_w(H^1)}) / (||f||_{H^1} ||g||_{X_w}), sigma == 1
//   T4.3i        ||Pi(f,g)||_{J_w(L^p)} / (||f||_p ||g||_{X_w})
//   T4.3ii-pi1   ||Pi1(f,g)||_{J_w(H^1)} / (||f||_{H^1} ||g||_{X_w})
//   T4.3ii-pi2   ||Pi2(f,g)||_1 / (||f||_{H^1} ||g||_BMO)
//   L4.2i        ||Pi(f,g)||_p / (||f||_{X_w} ||g||_p)
//   L4.2ii       ||Pi(f,g)||_1 / (||f||_{X_w} ||g||_{H^1})
//   KP           kato_ponce_ratio with w_1, s = cfg.s, p = cfg.p
//   P6.2         ||fg||_{J_{w_1}(L^p)} / (||f||_p ||g||_bmo)
//   NEG          ||fg||_p / (||f||_p ||g||_bmo)     (expected to grow with N)
//   P6.3-b1      ||B1||_1 / (||f||_{h^1} ||g||_bmo)
//   P6.3-b2      ||B2||_{J_{w_1}(H^1)} / (||f||_{h^1} ||g||_bmo)
//   P6.3         max of the two above
//   APPX         ||Pi(f,g)||_{J_w(L^2)} / (||f||_2 ||g||_{X_w}), m alternating by octave
//
// Trials with a vanishing denominator are skipped and counted.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmlab/config.hpp"
#include "cmlab/grid.hpp"
#include "cmlab/report.hpp"

namespace cmlab {

std::vector<std::string> inequality_ids();
bool is_known_id(const std::string& id);

/// Seed of trial i, shared across resolutions.
std::uint64_t trial_seed(std::uint64_t base, int trial);

/// Ratio for one trial; nullopt when the denominator vanishes.
std::optional<double> trial_ratio(const std::string& id, const Grid& grid, std::uint64_t seed,
                                  const HarnessConfig& cfg, double f_scale = 1.0);

RatioReport estimate_ratio(const std::string& id, int trials, const Grid& grid,
                           std::uint64_t seed, const HarnessConfig& cfg = {});

/// Runs estimate_ratio at each N (ascending) with the same seeds.
RatioReport resolution_sweep(const std::string& id, const std::vector<int>& Ns, int trials,
                             std::uint64_t seed, const HarnessConfig& cfg = {});

}  // namespace cmlab
