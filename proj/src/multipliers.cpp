#include "cmlab/multipliers.hpp"

#include <cmath>

namespace cmlab {

SampledField apply_linear(const LinearSymbol& a, const SampledField& f) {
  SpectralField F = dft(f);
  for (std::size_t i = 0; i < F.size(); ++i) F[i] *= a(F.grid.frequency_at(i));
  return idft(F);
}

void multiply_radial(SpectralField& F, const RadialProfile& m) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i] == complex(0.0)) continue;
    F[i] *= m(F.grid.frequency_at(i).norm());
  }
}

SampledField apply_radial(const RadialProfile& m, const SampledField& f) {
  SpectralField F = dft(f);
  multiply_radial(F, m);
  return idft(F);
}

SampledField q_t(const LPFamily& fam, double t, const SampledField& f) {
  return apply_radial([&](double r) { return fam.psi(t * r); }, f);
}

SampledField p_t(const LPFamily& fam, double t, const SampledField& f) {
  return apply_radial([&](double r) { return fam.phi(t * r); }, f);
}

SampledField bessel(double s, const SampledField& f) {
  return apply_radial([s](double r) { return std::pow(1.0 + r * r, 0.5 * s); }, f);
}

SampledField j_w(const RegularizedWeight& rw, const SampledField& f) {
  return apply_radial([&](double r) { return rw(r); }, f);
}

SampledField j_w_inv(const RegularizedWeight& rw, const SampledField& f) {
  return apply_radial([&](double r) { return 1.0 / rw(r); }, f);
}

}  // namespace cmlab
