#include <cmath>
#include <cstdio>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "cmlab/bilinear.hpp"
#include "cmlab/error.hpp"
#include "cmlab/families.hpp"
#include "cmlab/field_io.hpp"
#include "cmlab/grid.hpp"

using namespace cmlab;

namespace {

SampledField random_field(const Grid& g, std::uint64_t seed) {
  const CounterRng rng(seed);
  SampledField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = {rng.normal(0, i), rng.normal(1, i)};
  return f;
}

double max_diff(const std::vector<complex>& a, const std::vector<complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("dft matches direct summation at N=16") {
  for (const Grid g : {Grid(1, 16), Grid(2, 16), Grid(1, 16, 3.0)}) {
    const auto f = random_field(g, 3);
    CHECK(max_diff(dft(f).coefficients, oracle::direct_dft(f)) < 1e-12);
  }
}

TEST_CASE("dft is linear") {
  const Grid g(1, 16);
  const auto f = random_field(g, 1), h = random_field(g, 2);
  const complex a{0.3, -1.7};
  const auto lhs = dft(f * a + h).coefficients;
  const auto F = oracle::direct_dft(f), H = oracle::direct_dft(h);
  std::vector<complex> rhs(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) rhs[i] = a * F[i] + H[i];
  CHECK(max_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("delta spectrum at k=0 with value L^n is the constant one") {
  for (const Grid g : {Grid(1, 32), Grid(2, 16)}) {
    SpectralField F(g);
    F.at(0, 0) = g.volume();
    const auto f = idft(F);
    for (const auto& z : f.values) CHECK(std::abs(z - 1.0) < 1e-14);
  }
}

TEST_CASE("idft inverts dft") {
  for (const Grid g : {Grid(1, 256), Grid(2, 32)}) {
    const auto f = random_field(g, 9);
    CHECK(max_diff(idft(dft(f)).values, f.values) < 1e-12);
  }
}

TEST_CASE("integrate") {
  const Grid g(1, 64);
  CHECK(std::abs(integrate(SampledField::constant(g, 2.5)) - 2.5 * g.volume()) < 1e-12);
  SampledField mode(g), s2(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.position_at(i)[0];
    mode[i] = std::polar(1.0, g.frequency(3) * x);
    s2[i] = std::pow(std::sin(2 * std::numbers::pi * x / g.side()), 2);
  }
  CHECK(std::abs(integrate(mode)) < 1e-12);
  CHECK(std::abs(integrate(s2) - g.volume() / 2) < 1e-12);
}

TEST_CASE("Parseval on 100 random fields") {
  for (const Grid g : {Grid(1, 128), Grid(2, 16)}) {
    for (int s = 0; s < 50; ++s) {
      const auto f = random_field(g, 100 + s);
      const auto F = dft(f);
      double a = 0.0, b = 0.0;
      for (const auto& z : f.values) a += std::norm(z);
      for (const auto& z : F.coefficients) b += std::norm(z);
      CHECK(std::abs(a * g.cell_volume() - b / g.volume()) <= 1e-10 * b / g.volume());
    }
  }
}

TEST_CASE("zero padding and truncation") {
  const Grid g(1, 32);
  SpectralField F(g);
  F.at(3) = g.volume();
  const auto fine = idft(zero_pad(F, 2));
  for (std::size_t i = 0; i < fine.size(); ++i) {
    CHECK(std::abs(fine[i] - std::polar(1.0, g.frequency(3) * fine.grid.position_at(i)[0])) < 1e-13);
  }
  const auto G = dft(random_field(g, 4));
  CHECK(max_diff(truncate(zero_pad(G, 2), g).coefficients, G.coefficients) == 0.0);
}

TEST_CASE("padded product equals direct convolution") {
  for (const Grid g : {Grid(1, 32), Grid(2, 16)}) {
    auto A = dft(random_field(g, 5)), B = dft(random_field(g, 6));
    band_limit(A, g.points() / 4);
    band_limit(B, g.points() / 4);
    const auto one = [](const Frequency&, const Frequency&) { return 1.0; };
    const auto ref = oracle::direct_bilinear(g, one, A.coefficients, B.coefficients, 1.0 / g.volume());
    CHECK(max_diff(dealiased_product(A, B).coefficients, ref) < 1e-12);
  }
}

TEST_CASE("mixing grids is a precondition failure") {
  const auto f = random_field(Grid(1, 16), 1), h = random_field(Grid(1, 32), 1);
  CHECK_THROWS_AS(f + h, Error);
  try {
    (void)(f + h);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("field files round trip") {
  const auto f = random_field(Grid(2, 16, 5.0), 7);
  const auto back = parse_field(serialize_field(f));
  CHECK(back.grid == f.grid);
  CHECK(max_diff(back.values, f.values) == 0.0);
  CHECK_THROWS_AS(parse_field(R"({"n":1,"N":16,"L":1,"values":[[0,0]]})"), Error);
}
