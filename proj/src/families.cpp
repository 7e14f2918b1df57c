#include "cmlab/families.hpp"

#include <cmath>
#include <numbers>

#include "cmlab/error.hpp"
#include "cmlab/profiles.hpp"

namespace cmlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t counter) const {
  return splitmix64(splitmix64(seed_ ^ splitmix64(stream)) + counter);
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t counter) const {
  return double(bits(stream, counter) >> 11) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t stream, std::uint64_t counter) const {
  const double u1 = 1.0 - uniform(stream, 2 * counter);
  const double u2 = uniform(stream, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

enum Stream : std::uint64_t { kAmplitude = 1, kCentre, kShape, kModes };

// Counter for a wavevector, independent of N.
std::uint64_t key(int k1, int k2) {
  return (std::uint64_t(std::uint32_t(k1)) << 32) | std::uint32_t(k2);
}

double periodic_offset(double x, double c, double L) {
  double d = std::fmod(x - c, L);
  if (d < -0.5 * L) d += L;
  if (d >= 0.5 * L) d -= L;
  return d;
}

SampledField project(SampledField f, bool mean_zero) {
  SpectralField F = dft(f);
  band_limit(F, f.grid.points() / 4);
  if (mean_zero) F.at(0, 0) = 0.0;
  SampledField out = idft(F);
  for (auto& z : out.values) z = z.real();
  return out;
}

SampledField band_gauss(const Grid& g, const CounterRng& rng, double a, bool mean_zero) {
  SpectralField F(g);
  const int half = g.points() / 4;
  const int dim = g.dimension();
  for (int k1 = -half + 1; k1 < half; ++k1) {
    for (int k2 = (dim == 2 ? -half + 1 : 0); k2 < (dim == 2 ? half : 1); ++k2) {
      // canonical representative of {k, -k} carries the random draw
      const bool canonical = k1 > 0 || (k1 == 0 && k2 >= 0);
      const int c1 = canonical ? k1 : -k1;
      const int c2 = canonical ? k2 : -k2;
      const double re = rng.normal(kAmplitude, 2 * key(c1, c2));
      const double im = (c1 == 0 && c2 == 0) ? 0.0 : rng.normal(kAmplitude, 2 * key(c1, c2) + 1);
      const Frequency xi{g.frequency(k1), g.frequency(k2)};
      const double env = std::exp(-a * (xi.x * xi.x + xi.y * xi.y));
      F.at(k1, k2) = env * g.volume() * 0.1 * complex(re, canonical ? im : -im);
    }
  }
  return project(idft(F), mean_zero);
}

SampledField log_spike(const Grid& g, std::uint64_t seed) {
  const auto c = family_centre(g, seed);
  const double L = g.side();
  const double h = g.spacing();
  auto s2 = [&](double d) {
    const double v = 2.0 * std::sin(std::numbers::pi * d / L);
    return v * v;
  };
  SampledField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = g.position_at(i);
    const double d1 = periodic_offset(x[0], c[0], L);
    const double d2 = g.dimension() == 2 ? periodic_offset(x[1], c[1], L) : 0.0;
    double r2 = s2(d1) + s2(d2);
    if (std::abs(d1) < 0.5 * h && std::abs(d2) < 0.5 * h) r2 = s2(0.5 * h);
    f[i] = -0.5 * std::log(r2);
  }
  return project(f, false);
}

SampledField dyadic_atom(const Grid& g, const CounterRng& rng, std::uint64_t seed,
                         const FamilySpec& spec) {
  double scale;
  std::array<double, 2> c;
  if (spec.grid_tied) {
    const double cells = spec.param > 0.0 ? spec.param : 2.0 + 2.0 * rng.uniform(kShape, 0);
    scale = cells * g.spacing();
    c = family_centre(g, seed);
  } else {
    scale = std::exp2(-(spec.param > 0.0 ? spec.param : 2.0));
    c = {g.side() * rng.uniform(kCentre, 10), g.side() * rng.uniform(kCentre, 11)};
  }
  SampledField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = g.position_at(i);
    const double d1 = periodic_offset(x[0], c[0], g.side()) / scale;
    const double d2 = g.dimension() == 2 ? periodic_offset(x[1], c[1], g.side()) / scale : 0.0;
    f[i] = -d1 * std::exp(-0.5 * (d1 * d1 + d2 * d2));
  }
  return project(f, true);
}

SampledField smoothed_step(const Grid& g, const CounterRng& rng, double width) {
  const double L = g.side();
  const double shift = L * rng.uniform(kCentre, 20);
  SampledField f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = std::fmod(g.position_at(i)[0] - shift + 2.0 * L, L);
    // rises across [0, width], falls across [L/2, L/2 + width]
    const double up = profile::smoothstep(x / width);
    const double down = profile::smoothstep((x - 0.5 * L) / width);
    f[i] = up - down;
  }
  return project(f, false);
}

SampledField bounded_trig(const Grid& g, const CounterRng& rng, int modes) {
  SampledField f(g);
  const int kmax = 16;
  for (int m = 0; m < modes; ++m) {
    const int k1 = 1 + int(rng.uniform(kModes, 4 * m) * kmax);
    const int k2 = g.dimension() == 2 ? int(rng.uniform(kModes, 4 * m + 1) * kmax) : 0;
    const double phase = 2.0 * std::numbers::pi * rng.uniform(kModes, 4 * m + 2);
    const double amp = (0.5 + rng.uniform(kModes, 4 * m + 3)) / modes;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto x = g.position_at(i);
      f[i] += amp * std::cos(g.frequency(k1) * x[0] + g.frequency(k2) * x[1] + phase);
    }
  }
  return project(f, false);
}

}  // namespace

std::array<double, 2> family_centre(const Grid& grid, std::uint64_t seed) {
  const CounterRng rng(seed);
  const double cell = grid.side() / 16.0;
  return {cell * double(rng.bits(kCentre, 0) % 16), cell * double(rng.bits(kCentre, 1) % 16)};
}

SampledField generate(const FamilySpec& spec, const Grid& grid, std::uint64_t seed) {
  const CounterRng rng(seed);
  switch (spec.kind) {
    case FamilyKind::BandGauss:
      return band_gauss(grid, rng, spec.param > 0.0 ? spec.param : 0.05, spec.mean_zero);
    case FamilyKind::BmoLogSpike: {
      SampledField f = log_spike(grid, seed);
      return spec.mean_zero ? project(f, true) : f;
    }
    case FamilyKind::DyadicAtom:
      return dyadic_atom(grid, rng, seed, spec);
    case FamilyKind::SmoothedStep: {
      SampledField f = smoothed_step(grid, rng, spec.param > 0.0 ? spec.param : 1.0);
      return spec.mean_zero ? project(f, true) : f;
    }
    case FamilyKind::BoundedTrig: {
      SampledField f = bounded_trig(grid, rng, spec.param > 0.0 ? int(spec.param) : 4);
      return spec.mean_zero ? project(f, true) : f;
    }
  }
  throw Error(ErrorKind::Precondition, "unknown family");
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::BandGauss: return "band_gauss";
    case FamilyKind::BmoLogSpike: return "bmo_log_spike";
    case FamilyKind::DyadicAtom: return "dyadic_atom";
    case FamilyKind::SmoothedStep: return "smoothed_step";
    case FamilyKind::BoundedTrig: return "bounded_trig";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
  for (auto k : {FamilyKind::BandGauss, FamilyKind::BmoLogSpike, FamilyKind::DyadicAtom,
                 FamilyKind::SmoothedStep, FamilyKind::BoundedTrig}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::Format, "unknown family '" + name + "'");
}

}  // namespace cmlab
