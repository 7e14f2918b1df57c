#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "cmlab/families.hpp"
#include "cmlab/kernels.hpp"
#include "cmlab/spaces.hpp"
#include "cmlab/time_grid.hpp"

using namespace cmlab;
using kernels::Backend;

namespace {

std::vector<complex> random_values(const Grid& g, std::uint64_t seed) {
  const CounterRng rng(seed);
  std::vector<complex> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {rng.normal(0, i), rng.normal(1, i)};
  return v;
}

std::vector<std::vector<double>> random_rows(const Grid& g, std::size_t count, std::uint64_t seed) {
  const CounterRng rng(seed);
  std::vector<std::vector<double>> rows(count, std::vector<double>(g.size()));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < g.size(); ++i) rows[j][i] = rng.uniform(j, i);
  }
  return rows;
}

const Grid kGrids[] = {Grid(1, 16), Grid(1, 64), Grid(2, 16), Grid(2, 32)};

}  // namespace

TEST_CASE("bilinear sum: serial, parallel and the double-sum oracle agree") {
  const kernels::PairSymbol sigma = [](const Frequency& a, const Frequency& b) {
    return (1.0 + a.x * a.x) / (2.0 + a.norm() + b.norm() * b.norm());
  };
  for (const auto& g : kGrids) {
    CAPTURE(g.dimension());
    CAPTURE(g.points());
    const auto a = random_values(g, 1), b = random_values(g, 2);
    std::vector<complex> s(g.size()), p(g.size());
    kernels::bilinear_sum(Backend::Serial, g, sigma, a, b, 0.5, s);
    kernels::bilinear_sum(Backend::Parallel, g, sigma, a, b, 0.5, p);
    const auto ref = oracle::direct_bilinear(g, sigma, a, b, 0.5);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(s[i] == p[i]);
      CHECK(std::abs(s[i] - ref[i]) <= 1e-12 * (1.0 + std::abs(ref[i])));
    }
  }
}

TEST_CASE("nontangential maximum") {
  for (const auto& g : kGrids) {
    const auto tg = TimeGrid::covering(g, 4);
    const auto rows = random_rows(g, tg.size(), 3);
    const std::vector<double> ap(tg.times().begin(), tg.times().end());
    const auto s = kernels::nontangential_max(Backend::Serial, g, rows, ap);
    const auto p = kernels::nontangential_max(Backend::Parallel, g, rows, ap);
    const auto ref = oracle::nontangential_max(g, rows, ap);
    CHECK(s == ref);
    CHECK(p == ref);
  }
  const Grid g(1, 64);
  CHECK(kernels::aperture_cells(g, 0.0) == 0);
  CHECK(kernels::aperture_cells(g, 1.0) == 3);    // 4 h = 1 is not < 1
  CHECK(kernels::aperture_cells(g, 1.01) == 4);
  CHECK(kernels::aperture_cells(g, 100.0) == 32);
}

TEST_CASE("cube statistics") {
  for (const auto& g : kGrids) {
    const auto v = random_values(g, 4);
    const DyadicCubeSet set(g);
    const auto s = kernels::cube_statistics(Backend::Serial, g, v, set.cubes());
    const auto p = kernels::cube_statistics(Backend::Parallel, g, v, set.cubes());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto ref = oracle::cube_stats(g, v, set.cubes()[i]);
      CHECK(s[i].mean_oscillation == p[i].mean_oscillation);
      CHECK(s[i].mean_abs == p[i].mean_abs);
      CHECK(s[i].mean_oscillation == doctest::Approx(ref.mean_oscillation).epsilon(1e-12));
      CHECK(s[i].mean_abs == doctest::Approx(ref.mean_abs).epsilon(1e-12));
    }
  }
}

TEST_CASE("dyadic cube set") {
  const Grid g(1, 64);
  const DyadicCubeSet set(g);
  int full = 0;
  for (const auto& c : set.cubes()) {
    CHECK(c.side == doctest::Approx(c.side_cells * g.spacing()));
    if (c.side_cells == 64) ++full;
  }
  CHECK(full == 1);
  for (const auto& c : set.small_cubes()) CHECK(c.side < 1.0);
  for (const auto& c : set.large_cubes()) CHECK(c.side >= 1.0);
  CHECK(set.small_cubes().size() + set.large_cubes().size() == set.cubes().size());
}

TEST_CASE("tent masses") {
  for (const auto& g : kGrids) {
    const auto tg = TimeGrid::covering(g, 4);
    const auto rows = random_rows(g, tg.size(), 5);
    const DyadicCubeSet set(g);
    const double w = g.cell_volume() * tg.weight();
    const auto s = kernels::tent_masses(Backend::Serial, g, rows, tg.times(), w, set.cubes());
    const auto p = kernels::tent_masses(Backend::Parallel, g, rows, tg.times(), w, set.cubes());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double ref = oracle::tent_mass(g, rows, tg.times(), w, set.cubes()[i]);
      CHECK(s[i] == doctest::Approx(ref).epsilon(1e-12));
      CHECK(p[i] == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}
