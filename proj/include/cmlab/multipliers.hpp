#pragma once

// Linear Fourier multipliers a(D) acting on sampled fields.

#include <functional>

#include "cmlab/grid.hpp"
#include "cmlab/lp_family.hpp"
#include "cmlab/weights.hpp"

namespace cmlab {

using LinearSymbol = std::function<complex(const Frequency&)>;
using RadialProfile = std::function<double(double)>;

/// a(D) f: multiply each coefficient by a(xi_k), then invert.
SampledField apply_linear(const LinearSymbol& a, const SampledField& f);
/// In-place coefficientwise multiplication by a radial profile m(|xi|).
void multiply_radial(SpectralField& F, const RadialProfile& m);
SampledField apply_radial(const RadialProfile& m, const SampledField& f);

SampledField q_t(const LPFamily& fam, double t, const SampledField& f);
SampledField p_t(const LPFamily& fam, double t, const SampledField& f);

/// J^s = (1 - Laplacian)^{s/2}, symbol <xi>^s.
SampledField bessel(double s, const SampledField& f);

/// J_w = w(D) and J_{w^-1} = (1/w)(D).
SampledField j_w(const RegularizedWeight& rw, const SampledField& f);
SampledField j_w_inv(const RegularizedWeight& rw, const SampledField& f);

}  // namespace cmlab
