#pragma once

// Bilinear Fourier multipliers T_sigma(f, g) and Coifman-Meyer symbol checks.
//
//   T_sigma(f,g)^(k) = L^-n sum_{i+j=k} sigma(xi_i, xi_j) fhat_i ghat_j
//
// evaluated on the input grid's wavenumber box. The result is exact (alias
// free) whenever both inputs are band-limited to |k| < N/4.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmlab/grid.hpp"
#include "cmlab/kernels.hpp"

namespace cmlab {

enum class SupportRegion {
  Unrestricted,
  XiDominant,   // |xi| >= |eta| / 20
  EtaDominant,  // |xi| <= |eta| / 10
};

using RealSymbol = std::function<double(const Frequency&)>;

struct BilinearSymbol {
  std::string name;
  kernels::PairSymbol evaluator;
  SupportRegion support = SupportRegion::Unrestricted;
  /// sigma(xi, eta) = a(xi) b(eta) when set; enables the padded-product path.
  std::optional<std::pair<RealSymbol, RealSymbol>> factors;

  /// At (0, 0) a non-finite value (e.g. 0/0) is replaced by 0.
  double operator()(const Frequency& xi, const Frequency& eta) const;
};

BilinearSymbol one_symbol();
/// |xi|^2 / (|xi|^2 + |eta|^2).
BilinearSymbol riesz_ratio_symbol();
/// <xi+eta>^s <xi>^-s theta(|eta| / <xi>), theta = 1 on [0, 1/4], 0 on [1/2, inf).
BilinearSymbol kato_ponce_symbol(double s = 6.0);
/// |xi|, homogeneous of degree one (not Coifman-Meyer).
BilinearSymbol degree_one_symbol();
BilinearSymbol separable_symbol(std::string name, RealSymbol a, RealSymbol b);

/// "one", "riesz-ratio", "kato-ponce-b1", "degree-one". Throws Precondition.
BilinearSymbol builtin_symbol(const std::string& name);
std::vector<std::string> builtin_symbol_names();

/// Spectrum of the product a*b computed on a grid refined by 2 and truncated
/// back; exact when both inputs are band-limited to |k| < N/4.
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);

SampledField apply_bilinear(const BilinearSymbol& sigma, const SampledField& f,
                            const SampledField& g,
                            kernels::Backend backend = kernels::Backend::Parallel);

struct CMReport {
  int dimension = 1;
  int max_order = 0;
  /// level[k] = sup over samples and |alpha|+|beta| = k of
  /// |d^alpha_xi d^beta_eta sigma| (|xi|+|eta|)^k.
  std::vector<double> level;
  double constant = 0.0;  // max over levels
};

struct CMOptions {
  int max_order = -1;          // default 4n+1
  double min_log2_radius = -4.0;
  double max_log2_radius = 8.0;
  double step_scale = 1.0;
};

/// Throws Error{NonFinite} if any difference quotient is not finite.
CMReport cm_constant(const BilinearSymbol& sigma, int dimension, const CMOptions& opts = {});

struct ScalingVerdict {
  double base_constant = 0.0;
  double extended_constant = 0.0;  // sample range extended by two octaves
  double growth = 0.0;
  bool coifman_meyer = true;
};

/// Recomputes cm_constant with the radius range extended by two octaves; a
/// Coifman-Meyer symbol keeps its constant, a degree-d symbol gains ~4^d.
/// Flags growth above a factor 2.
ScalingVerdict cm_scaling_test(const BilinearSymbol& sigma, int dimension, int max_order = 2);

/// tau1 = sigma chi, tau2 = sigma (1 - chi), chi = g0(20|xi|/|eta|) with g0
/// rising from 0 at 1 to 1 at 2, chi = 1 on eta = 0.
std::pair<BilinearSymbol, BilinearSymbol> split_sigma(const BilinearSymbol& sigma);
double split_cutoff(const Frequency& xi, const Frequency& eta);

}  // namespace cmlab
