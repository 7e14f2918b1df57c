#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cmlab/config.hpp"
#include "cmlab/error.hpp"
#include "cmlab/families.hpp"
#include "cmlab/harness.hpp"
#include "cmlab/report.hpp"
#include "cmlab/spaces.hpp"

using namespace cmlab;

namespace {

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(CMLAB_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return nlohmann::json::parse(ss.str());
}

}  // namespace

TEST_CASE("families are deterministic, real and band-limited") {
  for (const Grid g : {Grid(1, 256), Grid(2, 32)}) {
    for (auto k : {FamilyKind::BandGauss, FamilyKind::BmoLogSpike, FamilyKind::DyadicAtom,
                   FamilyKind::SmoothedStep, FamilyKind::BoundedTrig}) {
      CAPTURE(to_string(k));
      const auto a = generate(FamilySpec{k}, g, 12), b = generate(FamilySpec{k}, g, 12);
      CHECK(a.values == b.values);
      CHECK(a.max_abs() > 0.0);
      for (const auto& z : a.values) CHECK(z.imag() == 0.0);
      const auto F = dft(a);
      double out = 0.0, total = 0.0;
      for (std::size_t i = 0; i < F.size(); ++i) {
        const auto w = g.wavevector_at(i);
        total += std::norm(F[i]);
        if (std::abs(w[0]) >= g.points() / 4 || std::abs(w[1]) >= g.points() / 4) out += std::norm(F[i]);
      }
      CHECK(out <= 1e-28 * total);
      CHECK(family_kind_from_string(to_string(k)) == k);
    }
    const auto m = generate(FamilySpec{FamilyKind::BandGauss, 0.05, true}, g, 3);
    CHECK(std::abs(integrate(m)) <= 1e-12 * lp_norm(m, 1.0));
  }
  CHECK_THROWS_AS(family_kind_from_string("nope"), Error);
}

TEST_CASE("band_gauss is the same function at every resolution") {
  const auto a = generate(FamilySpec{FamilyKind::BandGauss, 0.1}, Grid(1, 256), 4);
  const auto b = generate(FamilySpec{FamilyKind::BandGauss, 0.1}, Grid(1, 512), 4);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[2 * i]) < 1e-12);
}

TEST_CASE("ratios are invariant under scaling f") {
  const Grid g(1, 256);
  const HarnessConfig cfg;
  for (const auto& id : inequality_ids()) {
    CAPTURE(id);
    for (int t = 0; t < 3; ++t) {
      const auto seed = trial_seed(9, t);
      const auto a = trial_ratio(id, g, seed, cfg);
      const auto b = trial_ratio(id, g, seed, cfg, 37.5);
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CHECK(*b == doctest::Approx(*a).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(trial_ratio("T9.9", g, 1, cfg), Error);
}

TEST_CASE("degenerate trials are skipped") {
  const Grid g(1, 256);
  CHECK_FALSE(trial_ratio("APPX", g, 5, HarnessConfig{}, 0.0).has_value());
  const auto r = estimate_ratio("KP", 0, g, 1);
  CHECK(r.resolutions.empty());
  CHECK(r.max == 0.0);
}

TEST_CASE("reports are deterministic") {
  const auto a = resolution_sweep("T4.3i", {256, 512}, 6, 42);
  const auto b = resolution_sweep("T4.3i", {256, 512}, 6, 42);
  CHECK(to_json(a).size() > 0);
  CHECK(report_hash(a) == report_hash(b));
  const auto r256 = estimate_ratio("T4.3i", 6, Grid(1, 256), 42);
  const auto r512 = estimate_ratio("T4.3i", 6, Grid(1, 512), 42);
  REQUIRE(a.resolutions.size() == 2);
  CHECK(a.resolutions[0].max == r256.max);
  CHECK(a.resolutions[1].max == r512.max);
  CHECK(report_hash(resolution_sweep("T4.3i", {256, 512}, 6, 43)) != report_hash(a));
}

TEST_CASE("report serialization") {
  const auto r = resolution_sweep("L4.2i", {256, 512}, 5, 3);
  const auto back = report_from_json(to_json(r));
  CHECK(back.id == r.id);
  CHECK(back.seed == r.seed);
  CHECK(report_hash(back) == report_hash(r));
  const auto csv = report_from_csv(to_csv(r));
  REQUIRE(csv.resolutions.size() == r.resolutions.size());
  for (std::size_t i = 0; i < r.resolutions.size(); ++i) {
    REQUIRE(csv.resolutions[i].trials.size() == r.resolutions[i].trials.size());
    for (std::size_t k = 0; k < r.resolutions[i].trials.size(); ++k) {
      CHECK(csv.resolutions[i].trials[k].ratio == r.resolutions[i].trials[k].ratio);
      CHECK(csv.resolutions[i].trials[k].seed == r.resolutions[i].trials[k].seed);
    }
    CHECK(csv.resolutions[i].max == r.resolutions[i].max);
  }
  // json -> csv -> json keeps the numbers
  const auto again = report_from_json(to_json(report_from_csv(to_csv(back))));
  CHECK(again.max == r.max);
  CHECK(again.median == r.median);

  RatioReport empty;
  empty.id = "KP";
  CHECK(to_csv(empty) == "id,N,trial,seed,ratio\n");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("config parsing") {
  const auto c = parse_config(R"({"grid": {"n": 1, "L": 8}, "weight": {"kind": "loglog", "b1": 1, "b2": 2},
                                  "lpfamily_q": 12, "tgrid": {"q": 6},
                                  "families": {"xw": ["bounded_trig"], "decay": [0.05, 0.1]},
                                  "modulation": "alternating", "p": 4})");
  CHECK(c.side == 8.0);
  CHECK(c.weight.kind == "loglog");
  CHECK(c.weight.b2 == 2.0);
  CHECK(c.lpfamily_q == 12);
  CHECK(c.tgrid_q == 6);
  CHECK(c.xw_families.size() == 1);
  CHECK(c.decay_hi == 0.1);
  CHECK(c.modulation == Modulation::Alternating);
  CHECK(c.p == 4.0);
  CHECK(parse_config(config_to_json(c)).lpfamily_q == 12);
  CHECK(config_to_json(parse_config(config_to_json(c))) == config_to_json(c));
  CHECK_THROWS_AS(parse_config("{not json"), Error);
}

TEST_CASE("golden: product with sigma = 1, unit weight, bounded_trig") {
  const auto gold = golden("t32i_trig.json");
  HarnessConfig cfg;
  cfg.weight.kind = "const";
  cfg.xw_families = {FamilyKind::BoundedTrig};
  const auto r = estimate_ratio("T3.2i", 50, Grid(1, 256), 0, cfg);
  CHECK(r.max == doctest::Approx(double(gold["max"])).epsilon(0.05));
}
