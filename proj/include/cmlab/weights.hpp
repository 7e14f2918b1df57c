#pragma once

// Admissible weights w on (0, inf), the dyadic resolution of unity phi_j and
// the regularized Fourier symbol w(xi) = sum_j w(2^-j) phi_j(xi).

#include <functional>
#include <string>
#include <vector>

#include "cmlab/grid.hpp"

namespace cmlab {

enum class Monotonicity { NonIncreasing, NonDecreasing };

struct DoublingConstants {
  double c = 0.0;
  double d = 0.0;
};

/// Monotone weight on (0, 1], extended by w(t) = w(1) for t >= 1.
class AdmissibleWeight {
 public:
  using Evaluator = std::function<double(double)>;

  AdmissibleWeight(std::string name, Evaluator on_unit_interval, Monotonicity direction,
                   DoublingConstants constants);

  double operator()(double t) const { return eval_(t >= 1.0 ? 1.0 : t); }

  const std::string& name() const { return name_; }
  Monotonicity direction() const { return direction_; }
  const DoublingConstants& doubling() const { return constants_; }

 private:
  std::string name_;
  Evaluator eval_;
  Monotonicity direction_;
  DoublingConstants constants_;
};

/// w_b(t) = (1 + log+(1/t))^b.
AdmissibleWeight make_log_weight(double b);
/// (1 + log+(1/t))^b1 (1 + log(1 + log+(1/t)))^b2, requires b1*b2 >= 0.
AdmissibleWeight make_loglog_weight(double b1, double b2);
AdmissibleWeight make_constant_weight();

/// Doubling ratios above this are reported as NotAdmissible.
inline constexpr double kDoublingThreshold = 1e3;

/// Tightest c, d over 0 <= j <= j_max of w(2^-2j)/w(2^-j), after checking
/// positivity and monotonicity on a log-spaced sample of (0, 1].
/// Throws Error{NonPositive | NonMonotone | NotAdmissible}.
DoublingConstants check_admissible(const AdmissibleWeight::Evaluator& w, int j_max);

/// phi_0 radial plateau profile; phi_1(x) = phi_0(x/2) - phi_0(x);
/// phi_j(x) = phi_1(2^{1-j} x).
class ResolutionOfUnity {
 public:
  double phi(int j, double r) const;
  /// Indices j whose phi_j may be nonzero at radius r (at most two).
  std::pair<int, int> active_range(double r) const;
  /// sum_{j<=J} phi_j(r), which telescopes to phi_0(r / 2^J).
  double partial_sum(int J, double r) const;
};

struct EquivalenceBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Regularized symbol xi -> sum_j w(2^-j) phi_j(|xi|); infinite sum evaluated
/// over the (at most two) active terms.
class RegularizedWeight {
 public:
  RegularizedWeight(AdmissibleWeight source, ResolutionOfUnity resolution);

  double operator()(double r) const;
  double operator()(const Frequency& xi) const { return (*this)(xi.norm()); }

  const AdmissibleWeight& source() const { return source_; }
  const ResolutionOfUnity& resolution() const { return resolution_; }
  /// Range of w(xi) / w(1/<xi>) over the sampling set of `equivalence_samples`.
  const EquivalenceBounds& equivalence() const { return bounds_; }

 private:
  AdmissibleWeight source_;
  ResolutionOfUnity resolution_;
  EquivalenceBounds bounds_;
};

RegularizedWeight regularize(const AdmissibleWeight& w, const ResolutionOfUnity& res = {});

/// Radii used to record equivalence constants: 2^u, u in [-2, 10] by 1/8, plus 0.
std::vector<double> equivalence_samples();

struct SymbolEstimateReport {
  /// constants[k] = sup |d^alpha w| <xi>^k / w(1/<xi>) over |alpha| = k.
  std::vector<double> weight_constants;
  /// Same for 1/w with w(1/<xi>) moved to the numerator.
  std::vector<double> inverse_constants;
};

/// Finite-difference check of |d^alpha w(xi)| <~ w(1/<xi>) <xi>^{-|alpha|} and
/// the mirror bound for 1/w, for |alpha| <= max_order <= 4, in dimension n.
/// `step_scale` multiplies the default relative step (used for refinement studies).
SymbolEstimateReport check_symbol_estimates(const RegularizedWeight& rw, int max_order,
                                            int dimension = 1, double step_scale = 1.0);

}  // namespace cmlab
