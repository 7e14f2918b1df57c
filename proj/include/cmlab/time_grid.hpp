#pragma once

// Log-spaced scales t_j = 2^(-j/q) with quadrature weight ln2/q, so that
// sum_j F(t_j) ln2/q approximates int_0^inf F(t) dt/t.

#include <vector>

#include "cmlab/grid.hpp"

namespace cmlab {

class TimeGrid {
 public:
  /// Nodes for j in [j_min, j_max]; requires q >= 4.
  TimeGrid(int points_per_octave, int j_min, int j_max);

  /// Smallest node one octave below 4/(5 xi_max), largest node at or above L,
  /// so every resolvable frequency is swept by the Q_t bands.
  static TimeGrid covering(const Grid& grid, int points_per_octave = 8);

  int points_per_octave() const { return q_; }
  double weight() const { return weight_; }
  /// Ascending scales.
  const std::vector<double>& times() const { return times_; }
  std::size_t size() const { return times_.size(); }
  double min_time() const { return times_.front(); }
  double max_time() const { return times_.back(); }

 private:
  int q_;
  double weight_;
  std::vector<double> times_;
};

}  // namespace cmlab
