#pragma once

// Function-space norms on the periodic grid. Cube suprema run over dyadic and
// half-shifted dyadic cubes; maximal functions over grid points and the time
// grid's scales.

#include <limits>
#include <vector>

#include "cmlab/grid.hpp"
#include "cmlab/kernels.hpp"
#include "cmlab/lp_family.hpp"
#include "cmlab/time_grid.hpp"
#include "cmlab/weights.hpp"

namespace cmlab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (int |f|^p)^(1/p); p = kInfinity gives max |f|.
double lp_norm(const SampledField& f, double p);

/// Cubes of side L 2^-g for g = 0..log2 N, at dyadic positions and shifted by
/// half a side along each axis.
class DyadicCubeSet {
 public:
  explicit DyadicCubeSet(const Grid& grid);

  const std::vector<Cube>& cubes() const { return cubes_; }
  /// Cubes of physical side < 1 and >= 1.
  std::vector<Cube> small_cubes() const;
  std::vector<Cube> large_cubes() const;

 private:
  std::vector<Cube> cubes_;
};

/// F*(x) = sup over nodes t <= t_cap (t < t_cap when `strict`) and grid
/// points |x-y| < t of |Phi_t * f (y)|, Phi-hat = mollifier profile.
std::vector<double> mollified_maximal_function(const SampledField& f, const TimeGrid& tgrid,
                                               double t_cap, bool strict,
                                               kernels::Backend backend = kernels::Backend::Parallel);

/// Truncated maximal function norm, scales 0 < t < 1/2.
double h1_norm(const SampledField& f, const TimeGrid& tgrid);
/// Scales up to L/2. Inputs should have mean zero (a warning is logged otherwise).
double H1_norm(const SampledField& f, const TimeGrid& tgrid);

double BMO_norm(const SampledField& f);
/// sup_{side<1} mean oscillation + sup_{side>=1} mean |f|.
double bmo_norm(const SampledField& f);

/// BMO_norm(f) + max_{t <= L/2} ||P_t f||_inf / w(t).
double xw_norm(const SampledField& f, const RegularizedWeight& rw, const LPFamily& fam,
               const TimeGrid& tgrid);

struct NormSpace {
  enum class Kind { Lp, Hardy, BMO } kind = Kind::Lp;
  double p = 2.0;

  static NormSpace lebesgue(double p) { return {Kind::Lp, p}; }
  static NormSpace hardy() { return {Kind::Hardy, 1.0}; }
  static NormSpace bmo() { return {Kind::BMO, kInfinity}; }
};

/// ||J_{w^-1} f|| in the chosen space; Hardy needs the time grid.
double jw_norm(const SampledField& f, const RegularizedWeight& rw, const NormSpace& space,
               const TimeGrid* tgrid = nullptr);

/// (L^-n sum_k |w_b(1/<xi_k>) fhat_k|^2)^(1/2).
double refined_sobolev_norm(const SampledField& f, double b);

/// || (sum_j w(2^-j)^-2 |phi_j(D) f|^2)^(1/2) ||_p.
double triebel_norm(const SampledField& f, const RegularizedWeight& rw, double p);

}  // namespace cmlab
