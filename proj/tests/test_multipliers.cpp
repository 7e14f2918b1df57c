#include <cmath>

#include "doctest.h"

#include "cmlab/families.hpp"
#include "cmlab/lp_family.hpp"
#include "cmlab/multipliers.hpp"
#include "cmlab/spaces.hpp"

using namespace cmlab;

namespace {

SampledField mode(const Grid& g, int k1, int k2 = 0) {
  SampledField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto p = g.position_at(i);
    f[i] = std::polar(1.0, g.frequency(k1) * p[0] + g.frequency(k2) * p[1]);
  }
  return f;
}

SampledField smooth(const Grid& g, std::uint64_t seed, bool mean_zero = false) {
  return generate(FamilySpec{FamilyKind::BandGauss, 0.05, mean_zero}, g, seed);
}

double rel(const SampledField& a, const SampledField& b) {
  return lp_norm(a - b, 2.0) / lp_norm(b, 2.0);
}

}  // namespace

TEST_CASE("linear multipliers") {
  const Grid g(1, 128);
  const auto f = smooth(g, 1);
  CHECK(rel(apply_linear([](const Frequency&) { return complex(1.0); }, f), f) < 1e-14);

  const auto e = mode(g, 5);
  const auto a = [](const Frequency& xi) { return complex(std::cos(xi.x), xi.x); };
  const complex a0 = a({g.frequency(5), 0.0});
  CHECK(rel(apply_linear(a, e), e * a0) < 1e-13);

  const auto b = [](const Frequency& xi) { return complex(1.0 / (1.0 + xi.x * xi.x)); };
  const auto ab = [&](const Frequency& xi) { return a(xi) * b(xi); };
  CHECK(rel(apply_linear(a, apply_linear(b, f)), apply_linear(ab, f)) < 1e-12);
}

TEST_CASE("Q_t and P_t") {
  const LPFamily fam;
  const Grid g(2, 32);
  const auto c = SampledField::constant(g, 3.0);
  for (double t : {0.05, 0.5, 4.0}) CHECK(q_t(fam, t, c).max_abs() < 1e-14);

  const Grid g1(1, 256);
  const auto f = smooth(g1, 2);
  // band-limited to |k| < 64, so |xi| < 8 pi: P_t f = f once 25.2 t <= 1.2
  CHECK(rel(p_t(fam, 0.04, f), f) < 1e-14);
  CHECK(rel(p_t(fam, 0.2, f), f) > 1e-6);

  // output spectrum of Q_t lies in the ring t|xi| in [r, R]
  const double t = 0.3;
  auto F = dft(smooth(g1, 3));
  multiply_radial(F, [&](double r) { return fam.psi(t * r); });
  const auto physical = dft(q_t(fam, t, smooth(g1, 3)));
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double r = t * g1.frequency_at(i).norm();
    if (r <= LPFamily::kInnerRadius || r >= LPFamily::kOuterRadius) {
      CHECK(F[i] == complex(0.0));
      CHECK(std::abs(physical[i]) < 1e-15);
    }
  }
}

TEST_CASE("psi normalization") {
  const LPFamily fam;
  CHECK(std::abs(fam.normalization_quadrature(64) - 1.0) <= 1e-8);
  CHECK(std::abs(fam.normalization_quadrature(64, 0.37) - 1.0) <= 1e-8);
  CHECK(fam.psi(0.79) == 0.0);
  CHECK(fam.psi(1.21) == 0.0);
  CHECK(fam.phi(1.2) == 1.0);
  CHECK(fam.phi(1.5) == 0.0);
  CHECK(fam.psi1(0.2) == 0.0);
  CHECK(fam.psi2(1.0) == 1.0);
  CHECK(fam.phi2(3.0) == 1.0);
}

TEST_CASE("Bessel potentials") {
  const Grid g(1, 128);
  const auto f = smooth(g, 4);
  CHECK(rel(bessel(0.0, f), f) < 1e-14);
  CHECK(rel(bessel(-3.0, bessel(3.0, f)), f) < 1e-10);
  const auto e = mode(g, 7);
  const double br = std::sqrt(1.0 + std::pow(g.frequency(7), 2));
  CHECK(rel(bessel(2.5, e), e * std::pow(br, 2.5)) < 1e-13);
}

TEST_CASE("J_w operators") {
  const Grid g(1, 256);
  const auto f = smooth(g, 5);
  const auto one = regularize(make_constant_weight());
  CHECK(rel(j_w(one, f), f) < 1e-14);
  CHECK(rel(j_w_inv(one, f), f) < 1e-14);

  for (double b : {-1.0, 1.0, 2.0}) {
    const auto rw = regularize(make_log_weight(b));
    CHECK(rel(j_w(rw, j_w_inv(rw, f)), f) < 1e-12);
    double min_w = 1e300;
    for (std::size_t i = 0; i < g.size(); ++i) min_w = std::min(min_w, rw(g.frequency_at(i)));
    CHECK(lp_norm(j_w_inv(rw, f), 2.0) <= lp_norm(f, 2.0) / min_w * (1 + 1e-12));
  }
}
