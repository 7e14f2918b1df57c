#pragma once

// Smooth one-dimensional building blocks shared by the resolution of unity,
// the Littlewood-Paley family and the symbol splitting.

#include <cmath>

namespace cmlab::profile {

/// e^{-1/s} for s > 0, else 0.
inline double flat_exp(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

/// C-infinity step: 0 for s <= 0, 1 for s >= 1, monotone in between.
inline double smoothstep(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = flat_exp(s);
  const double b = flat_exp(1.0 - s);
  return a / (a + b);
}

/// 1 for r <= inner, 0 for r >= outer, smooth and non-increasing between.
inline double plateau(double r, double inner, double outer) {
  return smoothstep((outer - r) / (outer - inner));
}

/// 0 below lo, rises on [lo, a], 1 on [a, b], falls on [b, hi], 0 above hi.
inline double annulus(double r, double lo, double a, double b, double hi) {
  if (r <= lo || r >= hi) return 0.0;
  return smoothstep((r - lo) / (a - lo)) * smoothstep((hi - r) / (hi - b));
}

/// Radial profile of the resolution of unity: 1 on |x| <= 1, 0 on |x| >= 3/2.
inline double phi0(double r) { return plateau(r, 1.0, 1.5); }

}  // namespace cmlab::profile
