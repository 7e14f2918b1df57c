#include <algorithm>
#include <map>

#include "detail.hpp"

namespace cmlab::kernels::detail {
namespace {

// Circular sliding max of half-width r (window 2r+1) by van Herk / Gil-Werman.
std::vector<double> sliding_max(std::span<const double> a, int r) {
  const int n = int(a.size());
  std::vector<double> out(n);
  const int w = 2 * r + 1;
  if (w >= n) {
    std::fill(out.begin(), out.end(), *std::max_element(a.begin(), a.end()));
    return out;
  }
  const int m = n + 2 * r;
  std::vector<double> e(m), pre(m), suf(m);
  for (int i = 0; i < m; ++i) e[i] = a[wrap(i - r, n)];
  for (int i = 0; i < m; ++i) pre[i] = (i % w == 0) ? e[i] : std::max(pre[i - 1], e[i]);
  for (int i = m - 1; i >= 0; --i) {
    suf[i] = (i == m - 1 || (i + 1) % w == 0) ? e[i] : std::max(suf[i + 1], e[i]);
  }
  for (int x = 0; x < n; ++x) out[x] = std::max(suf[x], pre[x + w - 1]);
  return out;
}

std::vector<double> row_disk_max(const Grid& g, const std::vector<double>& row, double t) {
  const int n = g.points();
  const double h = g.spacing();
  const int r = aperture_cells(g, t);
  if (g.dimension() == 1) return sliding_max(row, r);

  // half-width of the disk at each row offset, then max of horizontal windows
  std::vector<int> width(r + 1);
  for (int a = 0; a <= r; ++a) {
    int w = -1;
    while (w + 1 <= n / 2 && in_aperture(a, w + 1, h, t)) ++w;
    width[a] = w;
  }
  std::map<int, std::vector<double>> horizontal;
  for (int w : width) {
    if (w < 0 || horizontal.count(w)) continue;
    std::vector<double> hm(g.size());
    for (int x1 = 0; x1 < n; ++x1) {
      const auto line = std::span<const double>(row).subspan(std::size_t(x1) * n, n);
      const auto s = sliding_max(line, w);
      std::copy(s.begin(), s.end(), hm.begin() + std::size_t(x1) * n);
    }
    horizontal.emplace(w, std::move(hm));
  }
  std::vector<double> out(g.size(), 0.0);
  for (int x1 = 0; x1 < n; ++x1) {
    for (int x2 = 0; x2 < n; ++x2) {
      double m = 0.0;
      for (int a = -r; a <= r; ++a) {
        const int w = width[std::abs(a)];
        if (w < 0) continue;
        m = std::max(m, horizontal.at(w)[flat(g, x1 + a, x2)]);
      }
      out[flat(g, x1, x2)] = m;
    }
  }
  return out;
}

}  // namespace

void parallel_bilinear_sum(const Grid& g, const PairSymbol& sigma, std::span<const complex> a,
                           std::span<const complex> b, double scale, std::span<complex> out) {
  const int half = g.points() / 2;
  const auto sa = nonzero_support(g, a);
  const long total = long(out.size());
#pragma omp parallel for schedule(static)
  for (long o = 0; o < total; ++o) {
    const auto k = g.wavevector_at(std::size_t(o));
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
    out[std::size_t(o)] = acc * scale;
  }
}

std::vector<double> parallel_nontangential_max(const Grid& g,
                                               const std::vector<std::vector<double>>& rows,
                                               const std::vector<double>& apertures) {
  std::vector<std::vector<double>> per_row(rows.size());
  const long count = long(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < count; ++j) per_row[j] = row_disk_max(g, rows[j], apertures[j]);
  std::vector<double> out(g.size(), 0.0);
  for (const auto& r : per_row) {
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = std::max(out[x], r[x]);
  }
  return out;
}

std::vector<CubeStats> parallel_cube_statistics(const Grid& g, std::span<const complex> v,
                                                std::span<const Cube> cubes) {
  std::vector<CubeStats> out(cubes.size());
  const long count = long(cubes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) out[i] = cube_stats_one(g, v, cubes[i]);
  return out;
}

std::vector<double> parallel_tent_masses(const Grid& g,
                                         const std::vector<std::vector<double>>& density,
                                         const std::vector<double>& times, double cell_weight,
                                         std::span<const Cube> cubes) {
  // column sums over t_j <= side, one per distinct side
  std::map<double, std::vector<double>> columns;
  for (const auto& q : cubes) columns.emplace(q.side, std::vector<double>());
  std::vector<double> running(g.size(), 0.0);
  std::size_t j = 0;
  for (auto& [side, col] : columns) {
    for (; j < times.size() && in_tent(times[j], side); ++j) {
      for (std::size_t x = 0; x < running.size(); ++x) running[x] += density[j][x];
    }
    col = running;
  }
  std::vector<double> out(cubes.size(), 0.0);
  const long count = long(cubes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) {
    const Cube& q = cubes[i];
    const auto& col = columns.at(q.side);
    const int s2 = g.dimension() == 2 ? q.side_cells : 1;
    double acc = 0.0;
    for (int a = 0; a < q.side_cells; ++a) {
      for (int b = 0; b < s2; ++b) acc += col[flat(g, q.x0 + a, q.y0 + b)];
    }
    out[i] = acc * cell_weight;
  }
  return out;
}

}  // namespace cmlab::kernels::detail
