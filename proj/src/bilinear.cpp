#include "cmlab/bilinear.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "cmlab/error.hpp"
#include "cmlab/numerics.hpp"
#include "cmlab/profiles.hpp"

namespace cmlab {

double BilinearSymbol::operator()(const Frequency& xi, const Frequency& eta) const {
  const double v = evaluator(xi, eta);
  if (xi.x == 0.0 && xi.y == 0.0 && eta.x == 0.0 && eta.y == 0.0 && !std::isfinite(v)) return 0.0;
  return v;
}

BilinearSymbol separable_symbol(std::string name, RealSymbol a, RealSymbol b) {
  BilinearSymbol s;
  s.name = std::move(name);
  s.evaluator = [a, b](const Frequency& xi, const Frequency& eta) { return a(xi) * b(eta); };
  s.factors = std::make_pair(std::move(a), std::move(b));
  return s;
}

BilinearSymbol one_symbol() {
  auto unit = [](const Frequency&) { return 1.0; };
  return separable_symbol("one", unit, unit);
}

BilinearSymbol riesz_ratio_symbol() {
  BilinearSymbol s;
  s.name = "riesz-ratio";
  s.evaluator = [](const Frequency& xi, const Frequency& eta) {
    const double a = xi.x * xi.x + xi.y * xi.y;
    const double b = eta.x * eta.x + eta.y * eta.y;
    return a / (a + b);
  };
  return s;
}

BilinearSymbol kato_ponce_symbol(double s) {
  BilinearSymbol out;
  out.name = "kato-ponce-b1";
  out.evaluator = [s](const Frequency& xi, const Frequency& eta) {
    const Frequency sum{xi.x + eta.x, xi.y + eta.y};
    const double u = eta.norm() / xi.bracket();
    const double cut = profile::plateau(u, 0.25, 0.5);
    if (cut == 0.0) return 0.0;
    return std::pow(sum.bracket() / xi.bracket(), s) * cut;
  };
  return out;
}

BilinearSymbol degree_one_symbol() {
  BilinearSymbol s;
  s.name = "degree-one";
  s.evaluator = [](const Frequency& xi, const Frequency&) { return xi.norm(); };
  return s;
}

std::vector<std::string> builtin_symbol_names() {
  return {"one", "riesz-ratio", "kato-ponce-b1", "degree-one"};
}

BilinearSymbol builtin_symbol(const std::string& name) {
  if (name == "one") return one_symbol();
  if (name == "riesz-ratio") return riesz_ratio_symbol();
  if (name == "kato-ponce-b1") return kato_ponce_symbol();
  if (name == "degree-one") return degree_one_symbol();
  throw Error(ErrorKind::Precondition, "unknown symbol '" + name + "'");
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid, b.grid);
  const SampledField fa = idft(zero_pad(a, 2));
  const SampledField fb = idft(zero_pad(b, 2));
  return truncate(dft(pointwise(fa, fb)), a.grid);
}

SampledField apply_bilinear(const BilinearSymbol& sigma, const SampledField& f,
                            const SampledField& g, kernels::Backend backend) {
  require_same_grid(f.grid, g.grid);
  SpectralField F = dft(f);
  SpectralField G = dft(g);
  if (sigma.factors) {
    for (std::size_t i = 0; i < F.size(); ++i) {
      const Frequency xi = F.grid.frequency_at(i);
      F[i] *= sigma.factors->first(xi);
      G[i] *= sigma.factors->second(xi);
    }
    return idft(dealiased_product(F, G));
  }
  SpectralField H(f.grid);
  kernels::bilinear_sum(backend, f.grid, [&](const Frequency& a, const Frequency& b) { return sigma(a, b); },
                        F.coefficients, G.coefficients, 1.0 / f.grid.volume(), H.coefficients);
  return idft(H);
}

namespace {

constexpr int kMaxVars = 4;
using Point = std::array<double, kMaxVars>;

struct Stencil {
  std::vector<Point> offsets;  // in units of h
  std::vector<double> weights;
};

// Tensor-product stencil for the multi-index `alpha` over `vars` variables.
Stencil make_stencil(const std::array<int, kMaxVars>& alpha, int vars) {
  Stencil st;
  st.offsets.push_back(Point{});
  st.weights.push_back(1.0);
  for (int d = 0; d < vars; ++d) {
    if (alpha[d] == 0) continue;
    const auto off = numerics::central_offsets(alpha[d]);
    const auto w = numerics::fd_weights(alpha[d], off);
    Stencil next;
    for (std::size_t i = 0; i < st.offsets.size(); ++i) {
      for (std::size_t k = 0; k < off.size(); ++k) {
        if (w[k] == 0.0) continue;
        Point p = st.offsets[i];
        p[d] += off[k];
        next.offsets.push_back(p);
        next.weights.push_back(st.weights[i] * w[k]);
      }
    }
    st = std::move(next);
  }
  return st;
}

void multi_indices(int vars, int order, std::array<int, kMaxVars>& cur, int d,
                   std::vector<std::array<int, kMaxVars>>& out) {
  if (d == vars - 1) {
    cur[d] = order;
    out.push_back(cur);
    return;
  }
  for (int a = order; a >= 0; --a) {
    cur[d] = a;
    multi_indices(vars, order - a, cur, d + 1, out);
  }
  cur[d] = 0;
}

std::vector<Point> sample_directions(int dimension) {
  std::vector<Point> dirs;
  if (dimension == 1) {
    for (int i = 0; i < 16; ++i) {
      const double th = 2.0 * std::numbers::pi * (i + 0.5) / 16.0;
      dirs.push_back({std::cos(th), std::sin(th), 0.0, 0.0});
    }
    return dirs;
  }
  for (double a : {0.35, 0.8, 1.2}) {
    for (double b : {0.3, 2.1}) {
      for (double c : {0.9, 4.0}) {
        dirs.push_back({std::cos(a) * std::cos(b), std::cos(a) * std::sin(b),
                        std::sin(a) * std::cos(c), std::sin(a) * std::sin(c)});
      }
    }
  }
  return dirs;
}

double relative_step(int order) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(std::exp2(-8.0), std::pow(eps, 1.0 / (order + 2)));
}

}  // namespace

CMReport cm_constant(const BilinearSymbol& sigma, int dimension, const CMOptions& opts) {
  require(dimension == 1 || dimension == 2, "cm_constant: dimension must be 1 or 2");
  require(opts.max_log2_radius >= opts.min_log2_radius, "cm_constant: empty radius range");
  CMReport rep;
  rep.dimension = dimension;
  rep.max_order = opts.max_order >= 0 ? opts.max_order : 4 * dimension + 1;
  rep.level.assign(rep.max_order + 1, 0.0);

  const int vars = 2 * dimension;
  auto eval = [&](const Point& p) {
    const Frequency xi = dimension == 1 ? Frequency{p[0], 0.0} : Frequency{p[0], p[1]};
    const Frequency eta = dimension == 1 ? Frequency{p[1], 0.0} : Frequency{p[2], p[3]};
    return sigma(xi, eta);
  };
  auto rho_of = [&](const Point& p) {
    return dimension == 1 ? std::abs(p[0]) + std::abs(p[1])
                          : std::hypot(p[0], p[1]) + std::hypot(p[2], p[3]);
  };

  std::vector<std::vector<Stencil>> stencils(rep.max_order + 1);
  for (int k = 1; k <= rep.max_order; ++k) {
    std::vector<std::array<int, kMaxVars>> idx;
    std::array<int, kMaxVars> cur{};
    multi_indices(vars, k, cur, 0, idx);
    for (const auto& a : idx) stencils[k].push_back(make_stencil(a, vars));
  }

  const double stride = dimension == 1 ? 1.0 : 2.0;
  const auto dirs = sample_directions(dimension);
  for (double u = opts.min_log2_radius; u <= opts.max_log2_radius + 1e-9; u += stride) {
    for (const Point& dir : dirs) {
      Point p{};
      for (int d = 0; d < vars; ++d) p[d] = std::exp2(u) * dir[d];
      const double rho = rho_of(p);
      const double center = eval(p);
      if (!std::isfinite(center)) throw Error(ErrorKind::NonFinite, "symbol is not finite");
      rep.level[0] = std::max(rep.level[0], std::abs(center));
      for (int k = 1; k <= rep.max_order; ++k) {
        const double h = opts.step_scale * relative_step(k) * rho;
        for (const Stencil& st : stencils[k]) {
          double acc = 0.0;
          for (std::size_t i = 0; i < st.offsets.size(); ++i) {
            Point q = p;
            for (int d = 0; d < vars; ++d) q[d] += st.offsets[i][d] * h;
            acc += st.weights[i] * (eval(q) - center);
          }
          const double v = std::abs(acc) * std::pow(rho / h, k);
          if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "difference quotient blew up");
          rep.level[k] = std::max(rep.level[k], v);
        }
      }
    }
  }
  for (double v : rep.level) rep.constant = std::max(rep.constant, v);
  return rep;
}

ScalingVerdict cm_scaling_test(const BilinearSymbol& sigma, int dimension, int max_order) {
  CMOptions base;
  base.max_order = max_order;
  CMOptions wide = base;
  wide.max_log2_radius += 2.0;
  ScalingVerdict v;
  v.base_constant = cm_constant(sigma, dimension, base).constant;
  v.extended_constant = cm_constant(sigma, dimension, wide).constant;
  v.growth = v.base_constant > 0.0 ? v.extended_constant / v.base_constant : 1.0;
  v.coifman_meyer = v.growth <= 2.0;
  return v;
}

double split_cutoff(const Frequency& xi, const Frequency& eta) {
  const double e = eta.norm();
  if (e == 0.0) return 1.0;
  return profile::smoothstep(20.0 * xi.norm() / e - 1.0);
}

std::pair<BilinearSymbol, BilinearSymbol> split_sigma(const BilinearSymbol& sigma) {
  BilinearSymbol t1;
  t1.name = sigma.name + ":tau1";
  t1.support = SupportRegion::XiDominant;
  t1.evaluator = [sigma](const Frequency& xi, const Frequency& eta) {
    return sigma(xi, eta) * split_cutoff(xi, eta);
  };
  BilinearSymbol t2;
  t2.name = sigma.name + ":tau2";
  t2.support = SupportRegion::EtaDominant;
  t2.evaluator = [sigma](const Frequency& xi, const Frequency& eta) {
    const double s = sigma(xi, eta);
    return s - s * split_cutoff(xi, eta);
  };
  return {t1, t2};
}

}  // namespace cmlab
