#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version; both must agree (exactly for max-type kernels, to rounding
// for sums).

#include <functional>
#include <span>
#include <vector>

#include "cmlab/grid.hpp"

namespace cmlab {

/// Axis-aligned periodic cube measured in grid cells; y0 unused in 1-D.
struct Cube {
  int side_cells = 1;
  int x0 = 0;
  int y0 = 0;
  double side = 0.0;  // physical side length
};

}  // namespace cmlab

namespace cmlab::kernels {

enum class Backend { Serial, Parallel };

using PairSymbol = std::function<double(const Frequency&, const Frequency&)>;

/// out_k = scale * sum_{i+j=k} sigma(xi_i, xi_j) a_i b_j, with i, j, k all in
/// the grid's wavenumber box (no wraparound).
void bilinear_sum(Backend backend, const Grid& grid, const PairSymbol& sigma,
                  std::span<const complex> a, std::span<const complex> b, double scale,
                  std::span<complex> out);

/// F*(x) = max_j max_{|x-y| < apertures[j]} rows[j][y] on the periodic grid.
std::vector<double> nontangential_max(Backend backend, const Grid& grid,
                                      const std::vector<std::vector<double>>& rows,
                                      const std::vector<double>& apertures);

struct CubeStats {
  double mean_oscillation = 0.0;  // |Q|^-1 int_Q |f - f_Q|
  double mean_abs = 0.0;          // |Q|^-1 int_Q |f|
};

std::vector<CubeStats> cube_statistics(Backend backend, const Grid& grid,
                                       std::span<const complex> values,
                                       std::span<const Cube> cubes);

/// mu(T(Q)) = sum_{t_j <= side(Q)} sum_{x in Q} density[j][x] * cell_weight.
/// `times` must be ascending.
std::vector<double> tent_masses(Backend backend, const Grid& grid,
                                const std::vector<std::vector<double>>& density,
                                const std::vector<double>& times, double cell_weight,
                                std::span<const Cube> cubes);

/// Largest m >= 0 with m*h < t, capped at N/2.
int aperture_cells(const Grid& grid, double t);

}  // namespace cmlab::kernels
