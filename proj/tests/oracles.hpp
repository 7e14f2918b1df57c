#pragma once

// Brute-force reference implementations for the tests.

#include <cmath>
#include <numbers>
#include <vector>

#include "cmlab/grid.hpp"
#include "cmlab/kernels.hpp"

namespace oracle {

using cmlab::complex;
using cmlab::Grid;

inline std::vector<std::array<int, 2>> wavevectors(const Grid& g) {
  std::vector<std::array<int, 2>> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g.wavevector_at(i);
  return out;
}

/// f_hat_k = (L/N)^n sum_x f(x) e^{-i xi_k . x}, by direct summation.
inline std::vector<complex> direct_dft(const cmlab::SampledField& f) {
  const Grid& g = f.grid;
  const auto ks = wavevectors(g);
  std::vector<complex> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    complex acc = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      const auto p = g.position_at(x);
      const double ph = g.frequency(ks[k][0]) * p[0] + g.frequency(ks[k][1]) * p[1];
      acc += f[x] * std::polar(1.0, -ph);
    }
    out[k] = acc * g.cell_volume();
  }
  return out;
}

/// h_hat_k = scale * sum_{i+j=k} sigma(xi_i, xi_j) a_i b_j over the wavenumber box.
inline std::vector<complex> direct_bilinear(const Grid& g, const cmlab::kernels::PairSymbol& sigma,
                                            const std::vector<complex>& a,
                                            const std::vector<complex>& b, double scale) {
  const auto ks = wavevectors(g);
  const int lo = -g.points() / 2, hi = g.points() / 2 - 1;
  std::vector<complex> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const int j0 = ks[k][0] - ks[i][0], j1 = ks[k][1] - ks[i][1];
      if (j0 < lo || j0 > hi || j1 < lo || j1 > hi) continue;
      if (g.dimension() == 1 && j1 != 0) continue;
      const std::size_t j = g.dimension() == 1
                                ? std::size_t(g.index_of(j0))
                                : std::size_t(g.index_of(j0)) * g.points() + g.index_of(j1);
      const cmlab::Frequency xi{g.frequency(ks[i][0]), g.frequency(ks[i][1])};
      const cmlab::Frequency eta{g.frequency(j0), g.frequency(j1)};
      out[k] += sigma(xi, eta) * a[i] * b[j];
    }
    out[k] *= scale;
  }
  return out;
}

inline int min_image(int d, int n) {
  d = ((d % n) + n) % n;
  return d > n / 2 ? d - n : d;
}

/// F*(x) = max_j max over grid points y with |x - y| < t_j (periodic distance).
inline std::vector<double> nontangential_max(const Grid& g,
                                             const std::vector<std::vector<double>>& rows,
                                             const std::vector<double>& apertures) {
  const int N = g.points();
  const double h = g.spacing();
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    const int x1 = g.dimension() == 1 ? int(x) : int(x) / N;
    const int x2 = g.dimension() == 1 ? 0 : int(x) % N;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (std::size_t y = 0; y < g.size(); ++y) {
        const int y1 = g.dimension() == 1 ? int(y) : int(y) / N;
        const int y2 = g.dimension() == 1 ? 0 : int(y) % N;
        const double a = min_image(x1 - y1, N), b = min_image(x2 - y2, N);
        if ((a * a + b * b) * h * h < apertures[j] * apertures[j]) {
          out[x] = std::max(out[x], rows[j][y]);
        }
      }
    }
  }
  return out;
}

inline std::vector<std::size_t> cube_cells(const Grid& g, const cmlab::Cube& c) {
  std::vector<std::size_t> out;
  const int N = g.points();
  for (int a = 0; a < c.side_cells; ++a) {
    const int i1 = (c.x0 + a) % N;
    if (g.dimension() == 1) {
      out.push_back(i1);
      continue;
    }
    for (int b = 0; b < c.side_cells; ++b) out.push_back(std::size_t(i1) * N + (c.y0 + b) % N);
  }
  return out;
}

inline cmlab::kernels::CubeStats cube_stats(const Grid& g, const std::vector<complex>& v,
                                            const cmlab::Cube& c) {
  const auto cells = cube_cells(g, c);
  complex mean = 0.0;
  for (auto i : cells) mean += v[i];
  mean /= double(cells.size());
  cmlab::kernels::CubeStats s;
  for (auto i : cells) {
    s.mean_oscillation += std::abs(v[i] - mean);
    s.mean_abs += std::abs(v[i]);
  }
  s.mean_oscillation /= double(cells.size());
  s.mean_abs /= double(cells.size());
  return s;
}

inline double tent_mass(const Grid& g, const std::vector<std::vector<double>>& density,
                        const std::vector<double>& times, double cell_weight,
                        const cmlab::Cube& c) {
  double m = 0.0;
  const auto cells = cube_cells(g, c);
  for (std::size_t j = 0; j < times.size(); ++j) {
    if (times[j] > c.side * (1.0 + 1e-12)) continue;
    for (auto i : cells) m += density[j][i];
  }
  return m * cell_weight;
}

}  // namespace oracle
