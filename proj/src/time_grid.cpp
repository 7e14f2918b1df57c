#include "cmlab/time_grid.hpp"

#include <cmath>
#include <numbers>

#include "cmlab/error.hpp"

namespace cmlab {

TimeGrid::TimeGrid(int points_per_octave, int j_min, int j_max)
    : q_(points_per_octave), weight_(std::numbers::ln2 / points_per_octave) {
  require(q_ >= 4, "time grid needs at least 4 points per octave");
  require(j_min <= j_max, "time grid: empty index range");
  for (int j = j_max; j >= j_min; --j) times_.push_back(std::exp2(-double(j) / q_));
}

TimeGrid TimeGrid::covering(const Grid& grid, int q) {
  const double t_low = 0.5 * 0.8 / grid.max_frequency();
  const int j_max = int(std::ceil(q * std::log2(1.0 / t_low) - 1e-9));
  const int j_min = int(std::floor(-q * std::log2(grid.side()) + 1e-9));
  return TimeGrid(q, j_min, j_max);
}

}  // namespace cmlab
