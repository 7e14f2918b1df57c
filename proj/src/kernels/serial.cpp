#include <algorithm>
#include <cmath>

#include "cmlab/error.hpp"
#include "detail.hpp"

namespace cmlab::kernels {

int aperture_cells(const Grid& grid, double t) {
  const double h = grid.spacing();
  int m = std::max(0, int(std::ceil(t / h)) - 1);
  while (m > 0 && !detail::in_aperture(m, 0, h, t)) --m;
  while (detail::in_aperture(m + 1, 0, h, t)) ++m;
  return std::min(m, grid.points() / 2);
}

void bilinear_sum(Backend backend, const Grid& grid, const PairSymbol& sigma,
                  std::span<const complex> a, std::span<const complex> b, double scale,
                  std::span<complex> out) {
  require(a.size() == grid.size() && b.size() == grid.size() && out.size() == grid.size(),
          "bilinear_sum: size mismatch");
  if (backend == Backend::Serial) {
    detail::serial_bilinear_sum(grid, sigma, a, b, scale, out);
  } else {
    detail::parallel_bilinear_sum(grid, sigma, a, b, scale, out);
  }
}

std::vector<double> nontangential_max(Backend backend, const Grid& grid,
                                      const std::vector<std::vector<double>>& rows,
                                      const std::vector<double>& apertures) {
  require(rows.size() == apertures.size(), "nontangential_max: one aperture per row");
  for (const auto& r : rows) require(r.size() == grid.size(), "nontangential_max: row size");
  return backend == Backend::Serial ? detail::serial_nontangential_max(grid, rows, apertures)
                                    : detail::parallel_nontangential_max(grid, rows, apertures);
}

std::vector<CubeStats> cube_statistics(Backend backend, const Grid& grid,
                                       std::span<const complex> values,
                                       std::span<const Cube> cubes) {
  require(values.size() == grid.size(), "cube_statistics: size mismatch");
  return backend == Backend::Serial ? detail::serial_cube_statistics(grid, values, cubes)
                                    : detail::parallel_cube_statistics(grid, values, cubes);
}

std::vector<double> tent_masses(Backend backend, const Grid& grid,
                                const std::vector<std::vector<double>>& density,
                                const std::vector<double>& times, double cell_weight,
                                std::span<const Cube> cubes) {
  require(density.size() == times.size(), "tent_masses: one density row per time");
  require(std::is_sorted(times.begin(), times.end()), "tent_masses: times must ascend");
  return backend == Backend::Serial
             ? detail::serial_tent_masses(grid, density, times, cell_weight, cubes)
             : detail::parallel_tent_masses(grid, density, times, cell_weight, cubes);
}

namespace detail {

Support nonzero_support(const Grid& g, std::span<const complex> a) {
  Support s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == complex(0.0)) continue;
    s.index.push_back(i);
    s.k.push_back(g.wavevector_at(i));
  }
  return s;
}

void serial_bilinear_sum(const Grid& g, const PairSymbol& sigma, std::span<const complex> a,
                         std::span<const complex> b, double scale, std::span<complex> out) {
  const int half = g.points() / 2;
  const auto sa = nonzero_support(g, a);
  for (std::size_t o = 0; o < out.size(); ++o) {
    const auto k = g.wavevector_at(o);
    complex acc = 0.0;
    for (std::size_t n = 0; n < sa.index.size(); ++n) {
      const int j1 = k[0] - sa.k[n][0];
      const int j2 = k[1] - sa.k[n][1];
      if (j1 < -half || j1 >= half || j2 < -half || j2 >= half) continue;
      const std::size_t jb = flat(g, j1, j2);
      if (b[jb] == complex(0.0)) continue;
      const Frequency xi{g.frequency(sa.k[n][0]), g.frequency(sa.k[n][1])};
      const Frequency eta{g.frequency(j1), g.frequency(j2)};
      acc += sigma(xi, eta) * a[sa.index[n]] * b[jb];
    }
    out[o] = acc * scale;
  }
}

std::vector<double> serial_nontangential_max(const Grid& g,
                                             const std::vector<std::vector<double>>& rows,
                                             const std::vector<double>& apertures) {
  const int n = g.points();
  const double h = g.spacing();
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const int r = aperture_cells(g, apertures[j]);
    const int r2 = g.dimension() == 2 ? r : 0;
    for (std::size_t x = 0; x < out.size(); ++x) {
      const int x1 = g.dimension() == 1 ? int(x) : int(x / n);
      const int x2 = g.dimension() == 1 ? 0 : int(x % n);
      double m = out[x];
      for (int a = -r; a <= r; ++a) {
        for (int b = -r2; b <= r2; ++b) {
          if (!in_aperture(a, b, h, apertures[j])) continue;
          m = std::max(m, rows[j][flat(g, x1 + a, x2 + b)]);
        }
      }
      out[x] = m;
    }
  }
  return out;
}

namespace {

CubeStats one_cube(const Grid& g, std::span<const complex> v, const Cube& q) {
  const int s2 = g.dimension() == 2 ? q.side_cells : 1;
  const double count = double(q.side_cells) * s2;
  complex mean = 0.0;
  double mean_abs = 0.0;
  for (int a = 0; a < q.side_cells; ++a) {
    for (int b = 0; b < s2; ++b) {
      const complex z = v[flat(g, q.x0 + a, q.y0 + b)];
      mean += z;
      mean_abs += std::abs(z);
    }
  }
  mean /= count;
  double osc = 0.0;
  for (int a = 0; a < q.side_cells; ++a) {
    for (int b = 0; b < s2; ++b) osc += std::abs(v[flat(g, q.x0 + a, q.y0 + b)] - mean);
  }
  return {osc / count, mean_abs / count};
}

}  // namespace

CubeStats cube_stats_one(const Grid& g, std::span<const complex> v, const Cube& q) {
  return one_cube(g, v, q);
}

std::vector<CubeStats> serial_cube_statistics(const Grid& g, std::span<const complex> v,
                                              std::span<const Cube> cubes) {
  std::vector<CubeStats> out(cubes.size());
  for (std::size_t i = 0; i < cubes.size(); ++i) out[i] = one_cube(g, v, cubes[i]);
  return out;
}

std::vector<double> serial_tent_masses(const Grid& g,
                                       const std::vector<std::vector<double>>& density,
                                       const std::vector<double>& times, double cell_weight,
                                       std::span<const Cube> cubes) {
  std::vector<double> out(cubes.size(), 0.0);
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const Cube& q = cubes[i];
    const int s2 = g.dimension() == 2 ? q.side_cells : 1;
    double acc = 0.0;
    for (std::size_t j = 0; j < times.size() && in_tent(times[j], q.side); ++j) {
      for (int a = 0; a < q.side_cells; ++a) {
        for (int b = 0; b < s2; ++b) acc += density[j][flat(g, q.x0 + a, q.y0 + b)];
      }
    }
    out[i] = acc * cell_weight;
  }
  return out;
}

}  // namespace detail
}  // namespace cmlab::kernels
