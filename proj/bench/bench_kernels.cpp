// Serial vs OpenMP timings for the kernels, with an agreement check.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "cmlab/families.hpp"
#include "cmlab/kernels.hpp"
#include "cmlab/spaces.hpp"
#include "cmlab/time_grid.hpp"

using namespace cmlab;
using kernels::Backend;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, const Grid& g, double ts, double tp, double diff) {
  std::printf("%-18s n=%d N=%-5d serial %9.3f ms  omp %9.3f ms  speedup %5.2f  max diff %.1e\n",
              name, g.dimension(), g.points(), 1e3 * ts, 1e3 * tp, ts / tp, diff);
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void bench(const Grid& g, int reps) {
  const auto f = generate(FamilySpec{FamilyKind::BandGauss}, g, 1);
  const auto F = dft(f);
  const auto tg = TimeGrid::covering(g, 8);

  {
    const kernels::PairSymbol sigma = [](const Frequency& a, const Frequency& b) {
      return a.norm() * a.norm() / (1.0 + a.norm() * a.norm() + b.norm() * b.norm());
    };
    std::vector<complex> s(g.size()), p(g.size());
    const int r = g.size() > 4096 ? 1 : reps;
    const double ts = seconds([&] {
      kernels::bilinear_sum(Backend::Serial, g, sigma, F.coefficients, F.coefficients, 1.0, s);
    }, r);
    const double tp = seconds([&] {
      kernels::bilinear_sum(Backend::Parallel, g, sigma, F.coefficients, F.coefficients, 1.0, p);
    }, r);
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) d = std::max(d, std::abs(s[i] - p[i]));
    row("bilinear_sum", g, ts, tp, d);
  }

  std::vector<std::vector<double>> rows;
  std::vector<double> apertures;
  for (double t : tg.times()) {
    std::vector<double> r(g.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::abs(f[i]) * (1.0 + 0.1 * std::sin(t * i));
    rows.push_back(std::move(r));
    apertures.push_back(t);
  }
  {
    std::vector<double> s, p;
    const double ts = seconds([&] { s = kernels::nontangential_max(Backend::Serial, g, rows, apertures); }, reps);
    const double tp = seconds([&] { p = kernels::nontangential_max(Backend::Parallel, g, rows, apertures); }, reps);
    row("nontangential_max", g, ts, tp, max_diff(s, p));
  }

  const DyadicCubeSet cubes(g);
  {
    std::vector<kernels::CubeStats> s, p;
    const double ts = seconds([&] { s = kernels::cube_statistics(Backend::Serial, g, f.values, cubes.cubes()); }, reps);
    const double tp = seconds([&] { p = kernels::cube_statistics(Backend::Parallel, g, f.values, cubes.cubes()); }, reps);
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      d = std::max({d, std::abs(s[i].mean_oscillation - p[i].mean_oscillation),
                    std::abs(s[i].mean_abs - p[i].mean_abs)});
    }
    row("cube_statistics", g, ts, tp, d);
  }
  {
    std::vector<double> s, p;
    const double w = g.cell_volume() * tg.weight();
    const double ts = seconds([&] { s = kernels::tent_masses(Backend::Serial, g, rows, tg.times(), w, cubes.cubes()); }, reps);
    const double tp = seconds([&] { p = kernels::tent_masses(Backend::Parallel, g, rows, tg.times(), w, cubes.cubes()); }, reps);
    row("tent_masses", g, ts, tp, max_diff(s, p));
  }
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  for (int N : {256, 1024, 4096}) bench(Grid(1, N), 3);
  for (int N : {32, 64}) bench(Grid(2, N), 2);
}
