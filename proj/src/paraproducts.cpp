#include "cmlab/paraproducts.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "cmlab/bilinear.hpp"
#include "cmlab/error.hpp"
#include "cmlab/multipliers.hpp"
#include "cmlab/spaces.hpp"

namespace cmlab {

double modulation_value(Modulation m, double t) {
  if (m == Modulation::Unit) return 1.0;
  const long octave = long(std::floor(std::log2(t)));
  return octave % 2 == 0 ? 1.0 : -1.0;
}

const char* to_string(Modulation m) { return m == Modulation::Unit ? "unit" : "alternating"; }

double ParaproductSpec::m_sup() const {
  double s = 0.0;
  for (double t : tgrid.times()) s = std::max(s, std::abs(m(t)));
  return s;
}

namespace {

// Radii of the nonzero, nonconstant part of a spectrum.
struct RadialRange {
  double lo = kInfinity;
  double hi = 0.0;
  bool empty() const { return hi == 0.0; }
};

RadialRange radial_range(const SpectralField& F) {
  RadialRange r;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i] == complex(0.0)) continue;
    const double rho = F.grid.frequency_at(i).norm();
    if (rho == 0.0) continue;
    r.lo = std::min(r.lo, rho);
    r.hi = std::max(r.hi, rho);
  }
  return r;
}

// Q_t F vanishes unless the ring [4/5, 6/5]/t meets the spectrum.
bool band_meets(const RadialRange& r, double t) {
  return !r.empty() && t * r.hi > LPFamily::kInnerRadius && t * r.lo < LPFamily::kOuterRadius;
}

// Samples of m(t|D|)F on the grid refined by 2.
SampledField fine(const SpectralField& F, const RadialProfile& m) {
  SpectralField G = F;
  multiply_radial(G, m);
  return idft(zero_pad(G, 2));
}

void accumulate(SampledField& acc, const SampledField& a, const SampledField& b, double c) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * a[i] * b[i];
}

enum class Outer { None, Q2, P2 };

// sum_j Outer_t[(Q_t f)(inner_t g)] m(t_j) dt with the product resolved on 2N.
SampledField paraproduct_sum(const ParaproductSpec& spec, const SampledField& f,
                             const SampledField& g, const RadialProfile& inner_profile_at_1,
                             Outer outer) {
  require_same_grid(f.grid, g.grid);
  const SpectralField F = dft(f);
  const SpectralField G = dft(g);
  const RadialRange range = radial_range(F);
  const Grid fine_grid = f.grid.refined(2);
  const auto& fam = spec.family;
  const double dt = spec.tgrid.weight();

  SampledField acc(fine_grid);
  SpectralField acc_hat(fine_grid);
  for (double t : spec.tgrid.times()) {
    if (!band_meets(range, t)) continue;
    const double c = spec.m(t) * dt;
    if (c == 0.0) continue;
    const SampledField a = fine(F, [&](double r) { return fam.psi(t * r); });
    const SampledField b = fine(G, [&](double r) { return inner_profile_at_1(t * r); });
    if (outer == Outer::None) {
      accumulate(acc, a, b, c);
      continue;
    }
    SpectralField prod = dft(pointwise(a, b));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (prod[i] == complex(0.0)) continue;
      const double r = fine_grid.frequency_at(i).norm();
      const double o = outer == Outer::Q2 ? fam.psi2(t * r) : fam.phi2(t * r);
      acc_hat[i] += c * o * prod[i];
    }
  }
  if (outer == Outer::None) return idft(truncate(dft(acc), f.grid));
  return idft(truncate(acc_hat, f.grid));
}

}  // namespace

SampledField pi(const ParaproductSpec& spec, const SampledField& f, const SampledField& g) {
  const auto& fam = spec.family;
  return paraproduct_sum(spec, f, g, [&](double r) { return fam.phi(r); }, Outer::None);
}

SampledField pi1(const ParaproductSpec& spec, const SampledField& f, const SampledField& g) {
  const auto& fam = spec.family;
  return paraproduct_sum(spec, f, g, [&](double r) { return fam.phi1(r); }, Outer::Q2);
}

SampledField pi2(const ParaproductSpec& spec, const SampledField& f, const SampledField& g) {
  const auto& fam = spec.family;
  return paraproduct_sum(spec, f, g, [&](double r) { return fam.psi1(r); }, Outer::P2);
}

double calderon_multiplier(const ParaproductSpec& spec, double r) {
  double s = 0.0;
  for (double t : spec.tgrid.times()) {
    const double v = spec.family.psi(t * r);
    s += v * v;
  }
  return s * spec.tgrid.weight();
}

SampledField calderon_reconstruct(const ParaproductSpec& spec, const SampledField& f) {
  return apply_radial([&](double r) { return calderon_multiplier(spec, r); }, f);
}

double quadratic_energy(const ParaproductSpec& spec, const SampledField& f) {
  const SpectralField F = dft(f);
  double s = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i] == complex(0.0)) continue;
    s += std::norm(F[i]) * calderon_multiplier(spec, F.grid.frequency_at(i).norm());
  }
  return s / f.grid.volume();
}

ProductParts product_decompose(const ParaproductSpec& spec, const SampledField& f,
                               const SampledField& g) {
  require_same_grid(f.grid, g.grid);
  const auto& fam = spec.family;
  const Grid fine_grid = f.grid.refined(2);
  const double dt = spec.tgrid.weight();

  SpectralField F = dft(f);
  SpectralField Lhat = F;
  multiply_radial(Lhat, mollifier_hat);
  SpectralField Hhat = F;
  for (std::size_t i = 0; i < Hhat.size(); ++i) Hhat[i] -= Lhat[i];
  const SpectralField G = dft(g);
  const SampledField g_fine = idft(zero_pad(G, 2));
  const RadialRange range = radial_range(Hhat);

  SpectralField b2_hat(fine_grid);
  SampledField b1_fine(fine_grid);
  for (double t : spec.tgrid.times()) {
    if (!band_meets(range, t)) continue;
    const SampledField a = fine(Hhat, [&](double r) {
      const double v = fam.psi(t * r);
      return v * v;
    });
    const SampledField low = fine(G, [&](double r) { return fam.phi1(t * r); });
    SpectralField prod = dft(pointwise(a, low));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (prod[i] == complex(0.0)) continue;
      b2_hat[i] += dt * fam.psi2(t * fine_grid.frequency_at(i).norm()) * prod[i];
    }
    for (std::size_t i = 0; i < b1_fine.size(); ++i) b1_fine[i] += dt * a[i] * (g_fine[i] - low[i]);
  }
  // (Lf) g and the quadrature residual ((1 - sum psi^2 dt)(D) Hf) g
  SpectralField rest = Hhat;
  multiply_radial(rest, [&](double r) { return 1.0 - calderon_multiplier(spec, r); });
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += Lhat[i];
  accumulate(b1_fine, idft(zero_pad(rest, 2)), g_fine, 1.0);

  return {idft(truncate(dft(b1_fine), f.grid)), idft(truncate(b2_hat, f.grid))};
}

double kato_ponce_ratio(const SampledField& f, const SampledField& g, double s, double p,
                        const RegularizedWeight& rw) {
  if (s <= 4.0 * f.grid.dimension() + 1.0) {
    std::clog << "warning: kato_ponce_ratio with s <= 4n+1\n";
  }
  const SampledField fg = idft(dealiased_product(dft(f), dft(g)));
  const double num = jw_norm(bessel(s, fg), rw, NormSpace::lebesgue(p));
  const double den = lp_norm(bessel(s, f), p) * bmo_norm(g) + lp_norm(f, p) * bmo_norm(bessel(s, g));
  if (den == 0.0) {
    if (f.max_abs() == 0.0 && g.max_abs() > 0.0) return 0.0;
    throw Error(ErrorKind::DivideByZero, "kato_ponce_ratio: zero denominator");
  }
  return num / den;
}

}  // namespace cmlab
