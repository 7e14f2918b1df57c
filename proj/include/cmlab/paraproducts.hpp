#pragma once

// Paraproducts Pi(f,g) = int (Q_t f)(P_t g) m(t) dt/t on the time grid, the
// split Pi = Pi1 + Pi2, Calderon reconstruction and the product decomposition
// fg = B1 + B2 with B2 the J_w(H^1)-valued part.

#include <functional>
#include <string>

#include "cmlab/grid.hpp"
#include "cmlab/lp_family.hpp"
#include "cmlab/time_grid.hpp"
#include "cmlab/weights.hpp"

namespace cmlab {

enum class Modulation {
  Unit,         // m == 1
  Alternating,  // m = +1 on even octaves floor(log2 t), -1 on odd ones
};

double modulation_value(Modulation m, double t);
const char* to_string(Modulation m);

struct ParaproductSpec {
  LPFamily family;
  TimeGrid tgrid;
  Modulation modulation = Modulation::Unit;

  double m(double t) const { return modulation_value(modulation, t); }
  /// sup |m| over the time grid.
  double m_sup() const;
};

SampledField pi(const ParaproductSpec& spec, const SampledField& f, const SampledField& g);
/// sum_j Q2_t[(Q_t f)(P1_t g)] m(t_j) dt
SampledField pi1(const ParaproductSpec& spec, const SampledField& f, const SampledField& g);
/// sum_j P2_t[(Q_t f)(Q1_t g)] m(t_j) dt
SampledField pi2(const ParaproductSpec& spec, const SampledField& f, const SampledField& g);

/// sum_j Q_t Q_t f dt, i.e. the multiplier sum_j psi(t_j |xi|)^2 dt.
SampledField calderon_reconstruct(const ParaproductSpec& spec, const SampledField& f);
/// sum_j psi(t_j r)^2 dt.
double calderon_multiplier(const ParaproductSpec& spec, double r);
/// sum_j ||Q_t f||_2^2 dt, by Plancherel.
double quadratic_energy(const ParaproductSpec& spec, const SampledField& f);

struct ProductParts {
  SampledField b1;
  SampledField b2;
};

/// f = Lf + Hf with Lf = Phi * f. B2 = sum_j Q2_t[(Q_t^2 Hf)(P1_t g)] dt and
/// B1 = (Lf) g + sum_j (Q_t^2 Hf)(g - P1_t g) dt + ((1 - sum_j psi_t^2 dt)(D) Hf) g.
ProductParts product_decompose(const ParaproductSpec& spec, const SampledField& f,
                               const SampledField& g);

/// ||J^s(fg)||_{J_w(L^p)} / (||J^s f||_p bmo(g) + ||f||_p bmo(J^s g)).
/// Throws DivideByZero when the denominator vanishes.
double kato_ponce_ratio(const SampledField& f, const SampledField& g, double s, double p,
                        const RegularizedWeight& rw);

}  // namespace cmlab
