#pragma once

// Radial Fourier-side profiles of the Littlewood-Paley family used by the
// paraproducts, with r = 4/5 and R = 6/5:
//
//   psi   ring bump on [4/5, 6/5], normalized so int_0^inf psi(s)^2 ds/s = 1
//   phi   == 1 on |xi| <= 6/5 (covers supp psi), 0 beyond 3/2
//   phi1  == 1 on |xi| <= r/3, 0 beyond r/2
//   psi1  = phi - phi1, supported in [r/3, 3/2]
//   psi2  == 1 on [r/2, 3R/2], supported in [r/4, 2R]
//   phi2  == 1 on |xi| <= 3, 0 beyond 4
//
// Q_t = psi(tD), P_t = phi(tD), and Q_t^(i), P_t^(i) likewise.

namespace cmlab {

struct RadialSupport {
  double inner = 0.0;  // profile vanishes for |xi| <= inner
  double outer = 0.0;  // profile vanishes for |xi| >= outer
};

class LPFamily {
 public:
  static constexpr double kInnerRadius = 0.8;  // r
  static constexpr double kOuterRadius = 1.2;  // R

  LPFamily();

  double psi(double r) const;
  double phi(double r) const;
  double phi1(double r) const;
  double psi1(double r) const { return phi(r) - phi1(r); }
  double psi2(double r) const;
  double phi2(double r) const;

  static RadialSupport psi_support() { return {kInnerRadius, kOuterRadius}; }
  static RadialSupport phi_support() { return {0.0, 1.5}; }
  static RadialSupport phi1_support() { return {0.0, kInnerRadius / 2}; }
  static RadialSupport psi1_support() { return {kInnerRadius / 3, 1.5}; }
  static RadialSupport psi2_support() { return {kInnerRadius / 4, 2 * kOuterRadius}; }
  static RadialSupport phi2_support() { return {0.0, 4.0}; }

  /// int_0^inf psi(s)^2 ds/s by the log-spaced rule with `points_per_octave`
  /// nodes s = 2^(j/q) (the same rule the time grid uses).
  double normalization_quadrature(int points_per_octave, double phase = 0.0) const;

 private:
  double ring_scale_;  // 1/sqrt(c), c = int bump^2 ds/s
};

/// Mollifier Phi with Phi-hat = phi_0 (1 on |xi| <= 1, 0 beyond 3/2).
double mollifier_hat(double r);

}  // namespace cmlab
