#pragma once

// Real-valued test functions, each a pure function of (kind, parameters,
// seed, grid) and projected onto |k_i| < N/4 so bilinear products are exact.
// Randomness comes from a counter-based SplitMix64 stream, so a family keyed
// by frequency (band_gauss) is the same continuum function at every N.

#include <cstdint>
#include <string>

#include "cmlab/grid.hpp"

namespace cmlab {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const;
  /// Uniform on [0, 1).
  double uniform(std::uint64_t stream, std::uint64_t counter) const;
  /// Standard normal (Box-Muller on two counters).
  double normal(std::uint64_t stream, std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);

enum class FamilyKind { BandGauss, BmoLogSpike, DyadicAtom, SmoothedStep, BoundedTrig };

struct FamilySpec {
  FamilyKind kind = FamilyKind::BandGauss;
  /// band_gauss: decay a in exp(-a|xi|^2); dyadic_atom: scale exponent j
  /// (scale 2^-j), or the scale in grid cells when grid_tied; smoothed_step:
  /// transition width; bounded_trig: number of modes. 0 picks the default.
  double param = 0.0;
  bool mean_zero = false;
  bool grid_tied = false;
};

/// Spike and grid-tied atom centres sit on multiples of L/16, a grid point at every N.
std::array<double, 2> family_centre(const Grid& grid, std::uint64_t seed);

SampledField generate(const FamilySpec& spec, const Grid& grid, std::uint64_t seed);

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

}  // namespace cmlab
