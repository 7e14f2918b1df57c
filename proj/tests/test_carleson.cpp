#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

#include "cmlab/carleson.hpp"
#include "cmlab/error.hpp"
#include "cmlab/families.hpp"
#include "cmlab/spaces.hpp"

using namespace cmlab;

namespace {

SampledField mode(const Grid& g, int k) {
  SampledField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::polar(1.0, g.frequency(k) * g.position_at(i)[0]);
  return f;
}

TentFunction random_tent(const Grid& g, const TimeGrid& tg, std::uint64_t seed) {
  const CounterRng rng(seed);
  TentFunction G(g, tg);
  std::uint64_t n = 0;
  for (auto& row : G.rows) {
    for (auto& z : row) z = {rng.normal(0, n), rng.normal(1, n)}, ++n;
  }
  return G;
}

double brute_carleson(const TentFunction& G) {
  std::vector<std::vector<double>> d;
  for (const auto& row : G.rows) {
    std::vector<double> r;
    for (const auto& z : row) r.push_back(std::norm(z));
    d.push_back(std::move(r));
  }
  double best = 0.0;
  const DyadicCubeSet set(G.grid);
  for (const auto& c : set.cubes()) {
    const double m = oracle::tent_mass(G.grid, d, G.tgrid.times(),
                                       G.grid.cell_volume() * G.tgrid.weight(), c);
    best = std::max(best, m / std::pow(c.side, G.grid.dimension()));
  }
  return best;
}

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(CMLAB_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return nlohmann::json::parse(ss.str());
}

}  // namespace

TEST_CASE("zero tent") {
  const Grid g(1, 64);
  CHECK(carleson_norm(TentFunction(g, TimeGrid::covering(g, 8))).norm == 0.0);
}

TEST_CASE("single mode has Carleson norm one") {
  const LPFamily fam;
  const Grid g(1, 512);
  const auto tg = TimeGrid::covering(g, 16);
  for (int k : {2, 17, 100}) {
    const auto G = tent_from_multiplier(mode(g, k), [&](double r) { return fam.psi(r); }, tg);
    CHECK(carleson_norm(G).norm == doctest::Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("Carleson norm matches enumeration at N=32") {
  for (const Grid g : {Grid(1, 32), Grid(2, 32)}) {
    const auto tg = TimeGrid::covering(g, 4);
    // indicator of one tent cell
    for (std::size_t j : {std::size_t(0), tg.size() / 2, tg.size() - 1}) {
      TentFunction G(g, tg);
      G.rows[j][g.size() / 3] = 1.0;
      CHECK(carleson_norm(G).norm == doctest::Approx(brute_carleson(G)).epsilon(1e-12));
    }
    const auto R = random_tent(g, tg, 5);
    CHECK(carleson_norm(R).norm == doctest::Approx(brute_carleson(R)).epsilon(1e-12));
    CHECK(carleson_norm(R, kernels::Backend::Serial).norm ==
          doctest::Approx(carleson_norm(R).norm).epsilon(1e-12));
  }
}

TEST_CASE("Carleson norm is monotone and quadratic") {
  const Grid g(1, 128);
  const auto tg = TimeGrid::covering(g, 8);
  const auto G = random_tent(g, tg, 7);
  TentFunction H = G;
  const CounterRng rng(8);
  std::uint64_t n = 0;
  for (auto& row : H.rows) {
    for (auto& z : row) z *= rng.uniform(0, n++);
  }
  CHECK(carleson_norm(H).norm <= carleson_norm(G).norm);
  TentFunction S = G;
  for (auto& row : S.rows) {
    for (auto& z : row) z *= 3.0;
  }
  CHECK(carleson_norm(S).norm == doctest::Approx(9.0 * carleson_norm(G).norm).epsilon(1e-10));
}

TEST_CASE("BMO Carleson ratio") {
  const LPFamily fam;
  const Grid g(1, 256);
  CHECK_THROWS_AS(bmo_carleson_ratio(SampledField::constant(g, 1.0), fam, TimeGrid::covering(g, 8)),
                  Error);

  double first = 0.0;
  for (int N : {256, 512, 1024}) {
    const Grid gn(1, N);
    const double r = bmo_carleson_ratio(mode(gn, 6), fam, TimeGrid::covering(gn, 8));
    if (first == 0.0) first = r;
    CHECK(std::abs(r / first - 1.0) <= 0.15);
  }

  const auto gold = golden("carleson_spike.json");
  const auto tg = TimeGrid::covering(g, 8);
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    worst = std::max(worst, bmo_carleson_ratio(generate(FamilySpec{FamilyKind::BmoLogSpike}, g, s), fam, tg));
  }
  CHECK(worst <= double(gold["family_max"]) * (1 + 1e-9));
  CHECK(worst == doctest::Approx(double(gold["family_max"])).epsilon(0.05));
}

TEST_CASE("weighted band") {
  const LPFamily fam;
  const Grid g(1, 256);
  const auto tg = TimeGrid::covering(g, 8);
  const auto h = generate(FamilySpec{FamilyKind::BmoLogSpike}, g, 2);
  const auto w1 = regularize(make_log_weight(1.0));
  CHECK(weighted_band_carleson(h, w1, fam, tg).constant_residual == 0.0);
  const auto c = weighted_band_carleson(SampledField::constant(g, 2.0), w1, fam, tg);
  CHECK(c.carleson_ratio == 0.0);

  const auto one = regularize(make_constant_weight());
  const auto G = tent_from_multiplier(h, [&](double r) { return fam.psi2(r); }, tg);
  CHECK(weighted_band_carleson(h, one, fam, tg).carleson_ratio ==
        doctest::Approx(carleson_norm(G).norm / std::pow(BMO_norm(h), 2)).epsilon(1e-12));

  std::vector<double> q, r;
  for (int N : {256, 512, 1024}) {
    const Grid gn(1, N);
    std::vector<SampledField> probes;
    for (int s = 0; s < 5; ++s) {
      probes.push_back(generate(FamilySpec{FamilyKind::BandGauss, 0.05, true}, gn, s));
    }
    const auto rep = weighted_band_carleson(generate(FamilySpec{FamilyKind::BmoLogSpike}, gn, 2), w1,
                                            fam, TimeGrid::covering(gn, 8), probes);
    q.push_back(rep.quadratic_constant);
    r.push_back(rep.carleson_ratio);
  }
  for (std::size_t i = 1; i < q.size(); ++i) {
    CHECK(std::abs(q[i] / q[0] - 1.0) <= 0.15);
    CHECK(std::abs(r[i] / r[0] - 1.0) <= 0.15);
  }
}

TEST_CASE("Carleson embedding") {
  const LPFamily fam;
  const Grid g(1, 256);
  const auto tg = TimeGrid::covering(g, 8);
  const auto one = TentFunction::constant(g, tg, 1.0);
  for (int s = 0; s < 5; ++s) {
    const auto G = tent_from_multiplier(generate(FamilySpec{FamilyKind::BmoLogSpike}, g, s),
                                        [&](double r) { return fam.psi(r); }, tg);
    for (double p : {1.0, 2.0, 3.0}) CHECK(carleson_embedding_ratio(one, G, p) <= 1.0 + 1e-10);
  }

  // F on a single tent cell, checked against direct enumeration
  const Grid s(1, 32);
  const auto ts = TimeGrid::covering(s, 4);
  TentFunction F(s, ts);
  const std::size_t j = ts.size() / 2, x = 11;
  F.rows[j][x] = 2.0;
  const auto G = random_tent(s, ts, 3);
  const double p = 2.0;
  const double num = std::pow(2.0, p) * std::norm(G.rows[j][x]) * s.cell_volume() * ts.weight();
  std::vector<std::vector<double>> rows(ts.size(), std::vector<double>(s.size(), 0.0));
  std::vector<double> apertures(ts.times().begin(), ts.times().end());
  rows[j][x] = 2.0;
  std::size_t keep = 0;
  while (keep < apertures.size() && apertures[keep] <= s.side() * (1 + 1e-12)) ++keep;
  rows.resize(keep);
  apertures.resize(keep);
  double integral = 0.0;
  for (double v : oracle::nontangential_max(s, rows, apertures)) integral += std::pow(v, p);
  integral *= s.cell_volume();
  CHECK(carleson_embedding_ratio(F, G, p) ==
        doctest::Approx(num / (brute_carleson(G) * integral)).epsilon(1e-12));
  CHECK_THROWS_AS(carleson_embedding_ratio(F, G, 5.0), Error);
}
