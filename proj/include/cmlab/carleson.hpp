#pragma once

// Discrete Carleson measures d mu = |G(x,t)|^2 dx dt/t on grid x time grid,
// and the checks built on them.

#include <vector>

#include "cmlab/grid.hpp"
#include "cmlab/kernels.hpp"
#include "cmlab/lp_family.hpp"
#include "cmlab/multipliers.hpp"
#include "cmlab/time_grid.hpp"
#include "cmlab/weights.hpp"

namespace cmlab {

struct TentFunction {
  Grid grid;
  TimeGrid tgrid;
  /// rows[j] holds G(., t_j), t_j ascending as in tgrid.times().
  std::vector<std::vector<complex>> rows;

  TentFunction(const Grid& g, const TimeGrid& tg);
  static TentFunction constant(const Grid& g, const TimeGrid& tg, complex c);
};

/// G(x, t) = (m(t|D|) f)(x).
TentFunction tent_from_multiplier(const SampledField& f, const RadialProfile& m,
                                  const TimeGrid& tgrid);

struct CarlesonResult {
  double norm = 0.0;
  Cube witness;
};

/// max over dyadic and shifted cubes of mu(Q x (0, side(Q)]) / |Q|.
CarlesonResult carleson_norm(const TentFunction& G,
                             kernels::Backend backend = kernels::Backend::Parallel);

/// carleson_norm(Q1_t g) / BMO(g)^2; DivideByZero for constant g.
double bmo_carleson_ratio(const SampledField& g, const LPFamily& fam, const TimeGrid& tgrid);

/// sum_j ||w(t_j) Q2_t J_{w^-1} f||_2^2 dt by Plancherel.
double weighted_quadratic_energy(const SampledField& f, const RegularizedWeight& rw,
                                 const LPFamily& fam, const TimeGrid& tgrid);

struct WeightedBandReport {
  double quadratic_constant = 0.0;  // max over probes of energy / ||f||_2^2
  double carleson_ratio = 0.0;      // carleson_norm(R_t h) / BMO(h)^2
  double constant_residual = 0.0;   // max |R_t 1|
};

/// R_t h = w(t) Q2_t J_{w^-1} h.
WeightedBandReport weighted_band_carleson(const SampledField& h, const RegularizedWeight& rw,
                                          const LPFamily& fam, const TimeGrid& tgrid,
                                          const std::vector<SampledField>& probes = {});

/// sum |F|^p |G|^2 / (||mu_G||_C int (F*)^p), scales t <= L.
double carleson_embedding_ratio(const TentFunction& F, const TentFunction& G, double p);

}  // namespace cmlab
