#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "cmlab/bilinear.hpp"
#include "cmlab/families.hpp"
#include "cmlab/multipliers.hpp"
#include "cmlab/spaces.hpp"

using namespace cmlab;

namespace {

SampledField field(const Grid& g, FamilyKind k, std::uint64_t seed) {
  return generate(FamilySpec{k}, g, seed);
}

double rel(const SampledField& a, const SampledField& b) {
  return lp_norm(a - b, 2.0) / lp_norm(b, 2.0);
}

BilinearSymbol kernel_only(BilinearSymbol s) {
  s.factors.reset();
  return s;
}

BilinearSymbol smooth_ratio() {
  BilinearSymbol s;
  s.name = "bracket-ratio";
  s.evaluator = [](const Frequency& a, const Frequency& b) {
    return a.bracket() / (a.bracket() + b.bracket());
  };
  return s;
}

}  // namespace

TEST_CASE("sigma = 1 gives the pointwise product") {
  for (const Grid g : {Grid(1, 256), Grid(2, 32)}) {
    const auto f = field(g, FamilyKind::BandGauss, 1);
    const auto h = field(g, FamilyKind::SmoothedStep, 2);
    CHECK(rel(apply_bilinear(one_symbol(), f, h), pointwise(f, h)) < 1e-10);
    for (auto b : {kernels::Backend::Serial, kernels::Backend::Parallel}) {
      CHECK(rel(apply_bilinear(kernel_only(one_symbol()), f, h, b), pointwise(f, h)) < 1e-10);
    }
  }
}

TEST_CASE("separable symbol") {
  const Grid g(1, 128);
  const auto f = field(g, FamilyKind::BandGauss, 3);
  const auto h = field(g, FamilyKind::BoundedTrig, 4);
  const RealSymbol a = [](const Frequency& xi) { return std::exp(-0.01 * xi.x * xi.x); };
  const auto sigma = separable_symbol("a(xi)", a, [](const Frequency&) { return 1.0; });
  const auto af = apply_linear([&](const Frequency& xi) { return complex(a(xi)); }, f);
  CHECK(rel(apply_bilinear(sigma, f, h), pointwise(af, h)) < 1e-12);
  CHECK(rel(apply_bilinear(kernel_only(sigma), f, h), pointwise(af, h)) < 1e-12);
}

TEST_CASE("direct double-sum oracle at N=32") {
  const Grid g(1, 32);
  const auto F = dft(field(g, FamilyKind::BandGauss, 5));
  const auto G = dft(field(g, FamilyKind::BoundedTrig, 6));
  for (const auto& name : {"riesz-ratio", "kato-ponce-b1"}) {
    const auto sigma = builtin_symbol(name);
    const auto ref = oracle::direct_bilinear(
        g, [&](const Frequency& a, const Frequency& b) { return sigma(a, b); }, F.coefficients,
        G.coefficients, 1.0 / g.volume());
    const auto out = dft(apply_bilinear(sigma, idft(F), idft(G))).coefficients;
    double d = 0.0, sum_f = 0.0, max_g = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      d = std::max(d, std::abs(out[i] - ref[i]));
      sum_f += std::abs(F[i]);
      max_g = std::max(max_g, std::abs(G[i]));
    }
    CHECK(d <= 1e-12 * sum_f * max_g / g.volume());
  }
}

TEST_CASE("bilinearity") {
  const Grid g(1, 128);
  const auto f1 = field(g, FamilyKind::BandGauss, 7), f2 = field(g, FamilyKind::BoundedTrig, 8);
  const auto h = field(g, FamilyKind::SmoothedStep, 9);
  const auto sigma = builtin_symbol("riesz-ratio");
  const double a = -2.25;
  const auto lhs = apply_bilinear(sigma, f1 * a + f2, h);
  const auto rhs = apply_bilinear(sigma, f1, h) * a + apply_bilinear(sigma, f2, h);
  CHECK(rel(lhs, rhs) < 1e-10);
}

TEST_CASE("Coifman-Meyer constants") {
  const auto one = cm_constant(one_symbol(), 1);
  CHECK(one.max_order == 5);
  CHECK(one.level[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < one.level.size(); ++k) CHECK(one.level[k] <= 1e-6);
  CHECK(cm_constant(one_symbol(), 2, CMOptions{3}).level[0] == doctest::Approx(1.0));

  CMOptions coarse{3}, fine{3};
  fine.step_scale = 0.5;
  const auto a = cm_constant(smooth_ratio(), 1, coarse);
  const auto b = cm_constant(smooth_ratio(), 1, fine);
  for (int k = 0; k <= 3; ++k) {
    CHECK(std::isfinite(a.level[k]));
    CHECK(std::abs(b.level[k] / a.level[k] - 1.0) <= 0.2);
  }

  const auto deg = cm_scaling_test(degree_one_symbol(), 1);
  CHECK_FALSE(deg.coifman_meyer);
  CHECK(deg.growth > 3.0);
  CHECK(cm_scaling_test(smooth_ratio(), 1).coifman_meyer);
  CHECK(cm_scaling_test(builtin_symbol("riesz-ratio"), 2).coifman_meyer);
}

TEST_CASE("symbol splitting") {
  const auto [t1, t2] = split_sigma(one_symbol());
  const Frequency a{1.0, 0.0}, b{0.0, 1.0};
  CHECK(t1(a, b) == 1.0);
  CHECK(t2(a, b) == 0.0);
  const Frequency small{1.0 / 40, 0.0};
  CHECK(t1(small, {1.0, 0.0}) == 0.0);
  CHECK(t2(small, {1.0, 0.0}) == 1.0);
  CHECK(split_cutoff({0.0, 0.0}, {0.0, 0.0}) == 1.0);

  for (const auto& sigma : {builtin_symbol("riesz-ratio"), smooth_ratio()}) {
    const auto [s1, s2] = split_sigma(sigma);
    for (int i = 0; i < 200; ++i) {
      const double th = 2 * std::numbers::pi * (i + 0.5) / 200, r = std::exp2(i % 17 - 8);
      const Frequency xi{r * std::cos(th), 0.0}, eta{r * std::sin(th), 0.0};
      CHECK(s1(xi, eta) + s2(xi, eta) == doctest::Approx(sigma(xi, eta)).epsilon(1e-15));
    }
    CHECK(std::isfinite(cm_constant(s1, 1, CMOptions{3}).constant));
    CHECK(std::isfinite(cm_constant(s2, 1, CMOptions{3}).constant));
  }
}
