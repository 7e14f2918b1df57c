#include "cmlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>

#include "cmlab/bilinear.hpp"
#include "cmlab/carleson.hpp"
#include "cmlab/error.hpp"
#include "cmlab/families.hpp"
#include "cmlab/harness.hpp"
#include "cmlab/multipliers.hpp"
#include "cmlab/paraproducts.hpp"
#include "cmlab/report.hpp"
#include "cmlab/spaces.hpp"

namespace cmlab {

namespace {

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel_err(const SampledField& a, const SampledField& ref) {
  const double den = lp_norm(ref, 2.0);
  const double num = lp_norm(a - ref, 2.0);
  return den > 0.0 ? num / den : num;
}

struct Check {
  CriterionResult& out;
  bool ok(bool cond, const std::string& what) {
    out.details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    if (!cond) out.passed = false;
    return cond;
  }
};

SampledField band_input(const Grid& g, std::uint64_t seed, bool mean_zero) {
  const double a = 0.02 + 0.18 * CounterRng(seed).uniform(7, 0);
  return generate(FamilySpec{FamilyKind::BandGauss, a, mean_zero}, g, seed);
}

SampledField bounded_input(const Grid& g, std::uint64_t seed) {
  switch (CounterRng(seed).bits(8, 0) % 3) {
    case 0: return band_input(g, seed, false);
    case 1: return generate(FamilySpec{FamilyKind::BoundedTrig}, g, seed);
    default: return generate(FamilySpec{FamilyKind::SmoothedStep}, g, seed);
  }
}

SampledField xw_input(const Grid& g, std::uint64_t seed) {
  static const FamilyKind kinds[] = {FamilyKind::BoundedTrig, FamilyKind::BmoLogSpike,
                                     FamilyKind::SmoothedStep};
  return generate(FamilySpec{kinds[CounterRng(seed).bits(9, 0) % 3]}, g, seed);
}

BilinearSymbol without_factors(BilinearSymbol s) {
  s.factors.reset();
  return s;
}

void identities(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const double tol = 1e-10;
  const auto rw = regularize(make_log_weight(1.0));
  const LPFamily fam;

  for (const Grid grid : {Grid(1, 256), Grid(2, 32)}) {
    const std::string tag = grid.dimension() == 1 ? " (n=1)" : " (n=2)";
    const auto f = band_input(grid, opts.seed, false);
    const auto g = xw_input(grid, opts.seed + 1);
    const auto fg = idft(dealiased_product(dft(f), dft(g)));

    double e = std::max(rel_err(apply_bilinear(one_symbol(), f, g), fg),
                        rel_err(apply_bilinear(without_factors(one_symbol()), f, g), fg));
    c.ok(e <= tol, fmt("T_1(f,g) = fg, rel err %.2e", e) + tag);

    e = rel_err(j_w(rw, j_w_inv(rw, f)), f);
    c.ok(e <= tol, fmt("J_w J_w^-1 = id, rel err %.2e", e) + tag);

    // J^s J^-s on coefficients; through sampled values the round-off of the
    // intermediate field is amplified by <xi_max>^s.
    auto F = dft(f);
    multiply_radial(F, [](double r) { return std::pow(1.0 + r * r, -3.0); });
    multiply_radial(F, [](double r) { return std::pow(1.0 + r * r, 3.0); });
    e = std::max(rel_err(idft(F), f), rel_err(bessel(-6.0, bessel(6.0, f)), f));
    c.ok(e <= tol, fmt("J^s J^-s = J^-s J^s = id (s=6), rel err %.2e", e) + tag);

    double split = 0.0;
    for (const auto& name : {"riesz-ratio", "kato-ponce-b1"}) {
      const auto sigma = builtin_symbol(name);
      const auto [t1, t2] = split_sigma(sigma);
      split = std::max(split, rel_err(apply_bilinear(t1, f, g) + apply_bilinear(t2, f, g),
                                      apply_bilinear(sigma, f, g)));
      for (int a = 0; a < 24; ++a) {
        for (int u = -6; u <= 6; ++u) {
          const double r = std::exp2(u), th = (a + 0.5) * std::numbers::pi / 12.0;
          const Frequency xi{r * std::cos(th), grid.dimension() == 2 ? 0.3 * r : 0.0};
          const Frequency eta{r * std::sin(th), grid.dimension() == 2 ? -0.7 * r : 0.0};
          const double s = sigma(xi, eta);
          split = std::max(split, std::abs(t1(xi, eta) + t2(xi, eta) - s) / std::max(1.0, std::abs(s)));
        }
      }
    }
    c.ok(split <= tol, fmt("tau1 + tau2 = sigma, rel err %.2e", split) + tag);

    const ParaproductSpec spec{fam, TimeGrid::covering(grid, 8), Modulation::Alternating};
    e = rel_err(pi1(spec, f, g) + pi2(spec, f, g), pi(spec, f, g));
    c.ok(e <= tol, fmt("Pi = Pi1 + Pi2, rel err %.2e", e) + tag);

    const auto wb = weighted_band_carleson(g, rw, fam, TimeGrid::covering(grid, 8));
    c.ok(wb.constant_residual <= tol, fmt("R_t 1 = 0, max |R_t 1| %.2e", wb.constant_residual) + tag);

    const ResolutionOfUnity res_unity;
    double pou = 0.0;
    for (double r : grid.radial_frequencies()) {
      pou = std::max(pou, std::abs(res_unity.partial_sum(res_unity.active_range(r).second, r) - 1.0));
    }
    c.ok(pou <= tol, fmt("sum phi_j = 1, max err %.2e", pou) + tag);

    F = dft(f);
    double lhs = 0.0, rhs = 0.0;
    for (const auto& z : f.values) lhs += std::norm(z);
    for (const auto& z : F.coefficients) rhs += std::norm(z);
    lhs *= grid.cell_volume();
    rhs /= grid.volume();
    e = std::abs(lhs - rhs) / rhs;
    c.ok(e <= tol, fmt("Parseval, rel err %.2e", e) + tag);
  }
}

void calderon(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const LPFamily fam;
  const double q64 = fam.normalization_quadrature(64);
  c.ok(std::abs(q64 - 1.0) <= 1e-8, fmt("psi normalization at 64 pts/octave: 1 %+.2e", q64 - 1.0));

  const Grid grid(1, 1024);
  const ParaproductSpec spec{fam, TimeGrid::covering(grid, 16), Modulation::Unit};
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto f = band_input(grid, trial_seed(opts.seed, i), true);
    worst = std::max(worst, rel_err(calderon_reconstruct(spec, f), f));
  }
  c.ok(worst <= 1e-3, fmt("reconstruction at q=16, worst rel L2 err %.2e over 20 fields", worst));
}

void quadratic(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const Grid grid(1, 1024);
  const ParaproductSpec spec{LPFamily(), TimeGrid::covering(grid, 16), Modulation::Unit};
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto f = band_input(grid, trial_seed(opts.seed + 3, i), true);
    const double r = quadratic_energy(spec, f) / std::pow(lp_norm(f, 2.0), 2);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  c.ok(lo >= 0.99 && hi <= 1.001, fmt("quadratic ratio in [%.6f, %.6f] over 50 fields", lo, hi));
}

void carleson_oracle(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const LPFamily fam;
  const auto psi = [&](double r) { return fam.psi(r); };
  for (const Grid grid : {Grid(1, 256), Grid(2, 64)}) {
    const auto tg = TimeGrid::covering(grid, 16);
    for (int k : {3, 8, 20}) {
      SampledField e(grid);
      for (std::size_t i = 0; i < e.size(); ++i) {
        const auto x = grid.position_at(i);
        e[i] = std::polar(1.0, grid.frequency(k) * x[0]);
      }
      const double norm = carleson_norm(tent_from_multiplier(e, psi, tg)).norm;
      c.ok(std::abs(norm - 1.0) <= 1e-2,
           fmt("single mode k=%g: carleson norm %.5f", k, norm) +
               (grid.dimension() == 1 ? " (n=1)" : " (n=2)"));
    }
  }
  const Grid grid(1, 256);
  const auto tg = TimeGrid::covering(grid, 16);
  const auto one = TentFunction::constant(grid, tg, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto G = tent_from_multiplier(xw_input(grid, trial_seed(opts.seed + 4, i)), psi, tg);
    for (double p : {1.0, 2.0, 4.0}) worst = std::max(worst, carleson_embedding_ratio(one, G, p));
  }
  c.ok(worst <= 1.0 + 1e-10, fmt("embedding ratio with F = 1: max %.12f", worst));
}

struct Interval {
  double lo = 1e300, hi = 0.0;
};

void norm_equivalence(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const LPFamily fam;
  const auto w1 = regularize(make_log_weight(1.0));
  const int first = opts.resolutions.front(), last = opts.resolutions.back();

  struct Pair {
    std::string name;
    std::function<double(const SampledField&)> num, den;
  };
  std::vector<Pair> pairs;
  for (double p : {4.0 / 3.0, 2.0, 4.0}) {
    pairs.push_back({fmt("J_w(L^p) / triebel, p=%.4g", p),
                     [&, p](const SampledField& f) { return jw_norm(f, w1, NormSpace::lebesgue(p)); },
                     [&, p](const SampledField& f) { return triebel_norm(f, w1, p); }});
  }
  for (double b : {-1.0, 1.0}) {
    auto rw = std::make_shared<RegularizedWeight>(regularize(make_log_weight(b)));
    pairs.push_back({fmt("J_w(L^2) / refined sobolev, w = log weight b=%g", b),
                     [rw](const SampledField& f) { return jw_norm(f, *rw, NormSpace::lebesgue(2.0)); },
                     [b](const SampledField& f) { return refined_sobolev_norm(f, -b); }});
  }
  const auto unit = regularize(make_constant_weight());
  std::shared_ptr<TimeGrid> tg;
  pairs.push_back({"X_1 / L^inf",
                   [&](const SampledField& f) { return xw_norm(f, unit, fam, *tg); },
                   [](const SampledField& f) { return lp_norm(f, kInfinity); }});

  for (const auto& pair : pairs) {
    Interval at[2];
    for (int side = 0; side < 2; ++side) {
      const Grid grid(1, side == 0 ? first : last);
      tg = std::make_shared<TimeGrid>(TimeGrid::covering(grid, 8));
      for (int i = 0; i < opts.pair_trials; ++i) {
        const auto f = bounded_input(grid, trial_seed(opts.seed + 5, i));
        const double r = pair.num(f) / pair.den(f);
        at[side].lo = std::min(at[side].lo, r);
        at[side].hi = std::max(at[side].hi, r);
      }
    }
    const double dlo = std::abs(at[1].lo / at[0].lo - 1.0);
    const double dhi = std::abs(at[1].hi / at[0].hi - 1.0);
    c.ok(dlo <= opts.max_drift && dhi <= opts.max_drift,
         pair.name + fmt(": [%.4g, %.4g]", at[0].lo, at[0].hi) +
             fmt(" -> [%.4g, %.4g]", at[1].lo, at[1].hi) +
             fmt(", endpoint shifts %.2f%% / %.2f%%", 100 * dlo, 100 * dhi));
  }
}

std::string drift_text(const RatioReport& r) {
  std::string s;
  for (const auto& e : r.resolutions) s += fmt(" %.0f:", e.N) + fmt("%.4g", e.max);
  s += "  growth";
  for (double g : r.growth()) s += fmt(" %+.2f%%", 100 * g);
  return s;
}

bool stable(const RatioReport& r, double max_drift) {
  for (double g : r.growth()) {
    if (g > max_drift) return false;
  }
  return !r.resolutions.empty() && r.resolutions.front().trials.size() > 0;
}

void sweep(Check& c, const std::string& label, const std::string& id, const HarnessConfig& cfg,
           const AcceptanceOptions& opts) {
  const auto r = resolution_sweep(id, opts.resolutions, opts.sweep_trials, opts.seed, cfg);
  c.ok(stable(r, opts.max_drift), label + drift_text(r));
}

void stability(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  HarnessConfig cfg;
  for (const std::string sym : {"one", "riesz-ratio"}) {
    HarnessConfig k = cfg;
    k.symbol = sym;
    sweep(c, "T3.2i " + sym + " p=2", "T3.2i", k, opts);
  }
  for (double p : {4.0 / 3.0, 2.0, 4.0}) {
    HarnessConfig k = cfg;
    k.p = p;
    sweep(c, fmt("T4.3i p=%.4g", p), "T4.3i", k, opts);
  }
  for (const std::string id : {"T4.3ii-pi1", "T4.3ii-pi2", "L4.2i", "L4.2ii", "KP", "P6.2",
                               "P6.3", "APPX"}) {
    sweep(c, id, id, cfg, opts);
  }
}

void negative_control(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const auto r = resolution_sweep("NEG", opts.resolutions, opts.sweep_trials, opts.seed);
  const double total = r.resolutions.back().max / r.resolutions.front().max - 1.0;
  c.ok(total > opts.min_negative_growth,
       "NEG" + drift_text(r) + fmt("  total %+.2f%%", 100 * total));
}

void product_reconstruction(CriterionResult& res, const AcceptanceOptions& opts) {
  Check c{res};
  const Grid grid(1, opts.resolutions.front());
  const ParaproductSpec spec{LPFamily(), TimeGrid::covering(grid, 8), Modulation::Unit};
  double worst = 0.0;
  for (int i = 0; i < opts.pair_trials; ++i) {
    const std::uint64_t s = trial_seed(opts.seed + 6, i);
    const auto f = i % 2 == 0 ? band_input(grid, s, false)
                              : generate(FamilySpec{FamilyKind::DyadicAtom, 2.0}, grid, s);
    const auto g = xw_input(grid, splitmix64(s));
    const auto parts = product_decompose(spec, f, g);
    worst = std::max(worst, rel_err(parts.b1 + parts.b2, idft(dealiased_product(dft(f), dft(g)))));
  }
  c.ok(worst <= 1e-9, fmt("B1 + B2 = fg over %g pairs, worst rel err %.2e", opts.pair_trials, worst));
  sweep(c, "P6.3-b1", "P6.3-b1", {}, opts);
  sweep(c, "P6.3-b2", "P6.3-b2", {}, opts);
}

void symbol_checker(CriterionResult& res, const AcceptanceOptions&) {
  Check c{res};
  const auto rep = cm_constant(one_symbol(), 1);
  c.ok(std::abs(rep.level[0] - 1.0) <= 1e-12, fmt("cm_constant(one) order 0 = %.15g", rep.level[0]));
  double noise = 0.0;
  for (std::size_t k = 1; k < rep.level.size(); ++k) noise = std::max(noise, rep.level[k]);
  c.ok(noise <= 1e-6, fmt("orders 1..%g FD noise %.2e", rep.max_order, noise));

  const auto one = cm_scaling_test(one_symbol(), 1);
  c.ok(one.coifman_meyer, fmt("scaling test keeps one: growth %.3f", one.growth));
  const auto deg = cm_scaling_test(degree_one_symbol(), 1);
  c.ok(!deg.coifman_meyer, fmt("scaling test flags degree-one: growth %.3f", deg.growth));
}

using Runner = void (*)(CriterionResult&, const AcceptanceOptions&);

struct Entry {
  const char* title;
  Runner run;
};

const Entry kCriteria[] = {
    {"exact identities", identities},
    {"calderon normalization", calderon},
    {"quadratic estimate", quadratic},
    {"carleson oracle", carleson_oracle},
    {"norm equivalence", norm_equivalence},
    {"boundedness stability", stability},
    {"negative control", negative_control},
    {"product reconstruction", product_reconstruction},
    {"symbol checker", symbol_checker},
};

}  // namespace

int criterion_count() { return int(std::size(kCriteria)); }

std::string criterion_title(int index) {
  require(index >= 1 && index <= criterion_count(), "criterion index out of range");
  return kCriteria[index - 1].title;
}

CriterionResult run_criterion(int index, const AcceptanceOptions& opts) {
  CriterionResult r;
  r.index = index;
  r.title = criterion_title(index);
  r.passed = true;
  const auto start = std::chrono::steady_clock::now();
  try {
    kCriteria[index - 1].run(r, opts);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("FAIL exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= criterion_count(); ++i) {
    out.push_back(run_criterion(i, opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "criterion %d %s %s (%.1fs)", r.index,
                r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
  return buf;
}

}  // namespace cmlab
