#include "cmlab/lp_family.hpp"

#include <cmath>
#include <numbers>

#include "cmlab/profiles.hpp"

namespace cmlab {
namespace {

const double kLogLo = std::log(LPFamily::kInnerRadius);
const double kLogHi = std::log(LPFamily::kOuterRadius);

// exp(-2/(1-u^2)) on u in (-1,1), u affine in log r across the ring.
double ring_bump(double r) {
  if (r <= LPFamily::kInnerRadius || r >= LPFamily::kOuterRadius) return 0.0;
  const double u = (2.0 * std::log(r) - kLogLo - kLogHi) / (kLogHi - kLogLo);
  const double v = 1.0 - u * u;
  return v > 0.0 ? std::exp(-2.0 / v) : 0.0;
}

// int bump(s)^2 ds/s = int bump(e^x)^2 dx; the integrand is smooth and
// compactly supported, so the trapezoid rule converges spectrally.
double ring_energy() {
  constexpr int kNodes = 1 << 14;
  const double dx = (kLogHi - kLogLo) / kNodes;
  double s = 0.0;
  for (int i = 1; i < kNodes; ++i) {
    const double b = ring_bump(std::exp(kLogLo + i * dx));
    s += b * b;
  }
  return s * dx;
}

}  // namespace

LPFamily::LPFamily() : ring_scale_(1.0 / std::sqrt(ring_energy())) {}

double LPFamily::psi(double r) const { return ring_scale_ * ring_bump(r); }

double LPFamily::phi(double r) const { return profile::plateau(r, kOuterRadius, 1.5); }

double LPFamily::phi1(double r) const {
  return profile::plateau(r, kInnerRadius / 3, kInnerRadius / 2);
}

double LPFamily::psi2(double r) const {
  return profile::annulus(r, kInnerRadius / 4, kInnerRadius / 2, 1.5 * kOuterRadius,
                          2 * kOuterRadius);
}

double LPFamily::phi2(double r) const { return profile::plateau(r, 3.0, 4.0); }

double LPFamily::normalization_quadrature(int points_per_octave, double phase) const {
  const double delta = std::numbers::ln2 / points_per_octave;
  double s = 0.0;
  // ring [4/5, 6/5] lies inside 2^[-1, 1]
  for (int j = -2 * points_per_octave; j <= 2 * points_per_octave; ++j) {
    const double v = psi(std::exp2((j + phase) / points_per_octave));
    s += v * v;
  }
  return s * delta;
}

double mollifier_hat(double r) { return profile::phi0(r); }

}  // namespace cmlab
