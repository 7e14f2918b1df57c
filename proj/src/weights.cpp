#include "cmlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmlab/error.hpp"
#include "cmlab/numerics.hpp"
#include "cmlab/profiles.hpp"

namespace cmlab {
namespace {

double log_plus_inv(double t) { return t >= 1.0 ? 0.0 : std::log(1.0 / t); }

constexpr int kConstructionJMax = 40;

}  // namespace

AdmissibleWeight::AdmissibleWeight(std::string name, Evaluator on_unit_interval,
                                   Monotonicity direction, DoublingConstants constants)
    : name_(std::move(name)),
      eval_(std::move(on_unit_interval)),
      direction_(direction),
      constants_(constants) {}

AdmissibleWeight make_log_weight(double b) {
  auto eval = [b](double t) { return std::pow(1.0 + log_plus_inv(t), b); };
  const auto dir = b >= 0.0 ? Monotonicity::NonIncreasing : Monotonicity::NonDecreasing;
  return AdmissibleWeight("log(b=" + std::to_string(b) + ")", eval, dir,
                          check_admissible(eval, kConstructionJMax));
}

AdmissibleWeight make_loglog_weight(double b1, double b2) {
  if (b1 * b2 < 0.0) {
    throw Error(ErrorKind::NotAdmissible, "loglog weight needs b1*b2 >= 0");
  }
  auto eval = [b1, b2](double t) {
    const double l = log_plus_inv(t);
    return std::pow(1.0 + l, b1) * std::pow(1.0 + std::log1p(l), b2);
  };
  const auto dir = b1 + b2 >= 0.0 ? Monotonicity::NonIncreasing : Monotonicity::NonDecreasing;
  return AdmissibleWeight("loglog(b1=" + std::to_string(b1) + ",b2=" + std::to_string(b2) + ")",
                          eval, dir, check_admissible(eval, kConstructionJMax));
}

AdmissibleWeight make_constant_weight() {
  return AdmissibleWeight("const", [](double) { return 1.0; }, Monotonicity::NonIncreasing,
                          {1.0, 1.0});
}

DoublingConstants check_admissible(const AdmissibleWeight::Evaluator& w, int j_max) {
  require(j_max >= 8, "check_admissible: j_max must be >= 8");
  // monotonicity and positivity on t = 2^-u, u in [0, 2 j_max] by 1/8
  int sign = 0;
  double prev = w(1.0);
  if (!(prev > 0.0) || !std::isfinite(prev)) throw Error(ErrorKind::NonPositive, "w(1) <= 0");
  for (int i = 1; i <= 16 * j_max; ++i) {
    const double cur = w(std::exp2(-i / 8.0));
    if (!(cur > 0.0) || !std::isfinite(cur)) {
      throw Error(ErrorKind::NonPositive, "weight is not positive and finite on (0,1]");
    }
    const double diff = cur - prev;
    const int s = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
    if (s != 0) {
      if (sign != 0 && s != sign) throw Error(ErrorKind::NonMonotone, "weight changes direction");
      sign = s;
    }
    prev = cur;
  }
  DoublingConstants k{std::numeric_limits<double>::infinity(), 0.0};
  for (int j = 0; j <= j_max; ++j) {
    const double ratio = w(std::exp2(-2.0 * j)) / w(std::exp2(-double(j)));
    k.c = std::min(k.c, ratio);
    k.d = std::max(k.d, ratio);
  }
  if (k.d > kDoublingThreshold || k.c < 1.0 / kDoublingThreshold) {
    throw Error(ErrorKind::NotAdmissible,
                "doubling ratio w(2^-2j)/w(2^-j) reaches " + std::to_string(k.d > 1.0 ? k.d : k.c));
  }
  return k;
}

double ResolutionOfUnity::phi(int j, double r) const {
  r = std::abs(r);
  if (j == 0) return profile::phi0(r);
  const double s = std::ldexp(1.0, -(j - 1));
  return profile::phi0(r * s / 2.0) - profile::phi0(r * s);
}

std::pair<int, int> ResolutionOfUnity::active_range(double r) const {
  r = std::abs(r);
  if (r < 1.0) return {0, 0};
  const int top = int(std::floor(std::log2(r))) + 1;
  return {std::max(top - 1, 0), top};
}

double ResolutionOfUnity::partial_sum(int J, double r) const {
  double s = 0.0;
  for (int j = 0; j <= J; ++j) s += phi(j, r);
  return s;
}

std::vector<double> equivalence_samples() {
  std::vector<double> r{0.0};
  for (int i = -16; i <= 80; ++i) r.push_back(std::exp2(i / 8.0));
  return r;
}

RegularizedWeight::RegularizedWeight(AdmissibleWeight source, ResolutionOfUnity resolution)
    : source_(std::move(source)), resolution_(resolution) {
  bounds_ = {std::numeric_limits<double>::infinity(), 0.0};
  for (double r : equivalence_samples()) {
    const double ratio = (*this)(r) / source_(1.0 / std::sqrt(1.0 + r * r));
    bounds_.lower = std::min(bounds_.lower, ratio);
    bounds_.upper = std::max(bounds_.upper, ratio);
  }
}

double RegularizedWeight::operator()(double r) const {
  r = std::abs(r);
  if (r <= 1.0) return source_(1.0);
  // On [2^(top-1), 2^top) only phi_{top-1} = a and phi_top = 1 - a are nonzero;
  // the convex form keeps w(xi) == w(1) exactly when the weight is constant.
  const int top = int(std::floor(std::log2(r))) + 1;
  const double a = profile::phi0(std::ldexp(r, -(top - 1)));
  const double w_hi = source_(std::ldexp(1.0, -top));
  const double w_lo = source_(std::ldexp(1.0, -(top - 1)));
  return w_hi + (w_lo - w_hi) * a;
}

RegularizedWeight regularize(const AdmissibleWeight& w, const ResolutionOfUnity& res) {
  return RegularizedWeight(w, res);
}

namespace {

// d^alpha of a function of (x, y) by tensor-product stencils.
template <class F>
double mixed_derivative(const F& f, double x, double y, int ax, int ay, double h) {
  const auto ox = numerics::central_offsets(ax);
  const auto oy = numerics::central_offsets(ay);
  const auto wx = numerics::fd_weights(ax, ox);
  const auto wy = numerics::fd_weights(ay, oy);
  // differences from the centre value, so constants give exactly 0
  const double centre = f(x, y);
  double acc = 0.0;
  for (std::size_t i = 0; i < ox.size(); ++i) {
    if (wx[i] == 0.0) continue;
    for (std::size_t k = 0; k < oy.size(); ++k) {
      if (wy[k] == 0.0) continue;
      acc += wx[i] * wy[k] * (f(x + ox[i] * h, y + oy[k] * h) - centre);
    }
  }
  return acc / std::pow(h, ax + ay);
}

// Relative step: 2^-10 where roundoff allows, else the 4th-order optimum eps^(1/(k+4)).
double relative_step(int order) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(std::exp2(-10.0), std::pow(eps, 1.0 / (order + 4)));
}

}  // namespace

SymbolEstimateReport check_symbol_estimates(const RegularizedWeight& rw, int max_order,
                                            int dimension, double step_scale) {
  require(max_order >= 0 && max_order <= 4, "check_symbol_estimates: max_order must be in [0,4]");
  require(dimension == 1 || dimension == 2, "check_symbol_estimates: dimension must be 1 or 2");
  SymbolEstimateReport rep;
  rep.weight_constants.assign(max_order + 1, 0.0);
  rep.inverse_constants.assign(max_order + 1, 0.0);

  auto w = [&](double x, double y) { return rw(std::hypot(x, y)); };
  auto winv = [&](double x, double y) { return 1.0 / rw(std::hypot(x, y)); };

  std::vector<double> angles{0.0};
  if (dimension == 2) angles = {0.0, 0.3, 0.7854, 1.2, 2.0};

  for (double r : equivalence_samples()) {
    const double br = std::sqrt(1.0 + r * r);
    const double ref = rw.source()(1.0 / br);
    for (double theta : angles) {
      const double x = r * std::cos(theta);
      const double y = dimension == 2 ? r * std::sin(theta) : 0.0;
      for (int k = 0; k <= max_order; ++k) {
        const double h = step_scale * relative_step(k) * std::max(r, 1e-3);
        for (int ax = k; ax >= (dimension == 2 ? 0 : k); --ax) {
          const int ay = k - ax;
          const double dw = k == 0 ? w(x, y) : mixed_derivative(w, x, y, ax, ay, h);
          const double di = k == 0 ? winv(x, y) : mixed_derivative(winv, x, y, ax, ay, h);
          const double scale = std::pow(br, k);
          rep.weight_constants[k] = std::max(rep.weight_constants[k], std::abs(dw) * scale / ref);
          rep.inverse_constants[k] = std::max(rep.inverse_constants[k], std::abs(di) * scale * ref);
        }
      }
    }
  }
  return rep;
}

}  // namespace cmlab
