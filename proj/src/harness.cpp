#include "cmlab/harness.hpp"

#include <algorithm>
#include <chrono>

#include "cmlab/bilinear.hpp"
#include "cmlab/error.hpp"
#include "cmlab/families.hpp"
#include "cmlab/multipliers.hpp"
#include "cmlab/paraproducts.hpp"
#include "cmlab/spaces.hpp"

namespace cmlab {

std::vector<std::string> inequality_ids() {
  return {"T3.2i", "T3.2ii",  "T4.3i",   "T4.3ii-pi1", "T4.3ii-pi2", "L4.2i", "L4.2ii",
          "KP",    "P6.2",    "NEG",     "P6.3",       "P6.3-b1",    "P6.3-b2", "APPX"};
}

bool is_known_id(const std::string& id) {
  const auto ids = inequality_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::uint64_t trial_seed(std::uint64_t base, int trial) {
  return splitmix64(base ^ (0xd1b54a32d192ed03ULL * std::uint64_t(trial + 1)));
}

namespace {

struct Context {
  Grid grid;
  HarnessConfig cfg;
  RegularizedWeight rw;
  RegularizedWeight w1;
  LPFamily fam;
  TimeGrid tmax;
  ParaproductSpec spec;

  Context(const Grid& g, const HarnessConfig& c)
      : grid(g),
        cfg(c),
        rw(regularize(c.weight.build())),
        w1(regularize(make_log_weight(1.0))),
        tmax(TimeGrid::covering(g, c.tgrid_q)),
        spec{LPFamily(), TimeGrid::covering(g, c.lpfamily_q), c.modulation} {}
};

enum Stream : std::uint64_t { kPick = 50, kDecay = 51 };

double decay(std::uint64_t seed, double lo, double hi) {
  return lo + (hi - lo) * CounterRng(seed).uniform(kDecay, 0);
}

SampledField lp_input(const Context& ctx, std::uint64_t seed, bool mean_zero = false) {
  FamilySpec s{FamilyKind::BandGauss, decay(seed, ctx.cfg.decay_lo, ctx.cfg.decay_hi),
               mean_zero};
  return generate(s, ctx.grid, seed);
}

SampledField xw_input(const Context& ctx, std::uint64_t seed) {
  const auto& kinds = ctx.cfg.xw_families;
  const auto kind = kinds[CounterRng(seed).bits(kPick, 0) % kinds.size()];
  return generate(FamilySpec{kind}, ctx.grid, seed);
}

SampledField hardy_input(const Context& ctx, std::uint64_t seed) {
  if (CounterRng(seed).bits(kPick, 1) % 2 == 0) return lp_input(ctx, seed, true);
  return generate(FamilySpec{FamilyKind::DyadicAtom, 2.0}, ctx.grid, seed);
}

SampledField local_hardy_input(const Context& ctx, std::uint64_t seed) {
  if (CounterRng(seed).bits(kPick, 2) % 2 == 0) return lp_input(ctx, seed, false);
  return generate(FamilySpec{FamilyKind::DyadicAtom, 2.0}, ctx.grid, seed);
}

SampledField smooth_input(const Context& ctx, std::uint64_t seed) {
  if (CounterRng(seed).bits(kPick, 3) % 2 == 0) {
    return generate(FamilySpec{FamilyKind::BoundedTrig}, ctx.grid, seed);
  }
  return generate(FamilySpec{FamilyKind::BandGauss, decay(seed, 0.05, 0.2)}, ctx.grid, seed);
}

std::optional<double> ratio(double num, double den) {
  if (!(den > 0.0)) return std::nullopt;
  return num / den;
}

SampledField product(const SampledField& f, const SampledField& g) {
  return idft(dealiased_product(dft(f), dft(g)));
}

std::optional<double> evaluate(const std::string& id, const Context& ctx, std::uint64_t seed,
                               double scale) {
  const std::uint64_t gseed = splitmix64(seed + 1);
  const auto& rw = ctx.rw;
  const double p = ctx.cfg.p;

  if (id == "T3.2i") {
    const SampledField f = lp_input(ctx, seed) * scale;
    const SampledField g = xw_input(ctx, gseed);
    const auto T = apply_bilinear(builtin_symbol(ctx.cfg.symbol), f, g);
    return ratio(jw_norm(T, rw, NormSpace::lebesgue(p)),
                 lp_norm(f, p) * xw_norm(g, rw, ctx.fam, ctx.tmax));
  }
  if (id == "T3.2ii") {
    const SampledField f = hardy_input(ctx, seed) * scale;
    const SampledField g = xw_input(ctx, gseed);
    const auto parts = product_decompose(ctx.spec, f, g);
    const double num = std::max(lp_norm(parts.b1, 1.0),
                                jw_norm(parts.b2, rw, NormSpace::hardy(), &ctx.tmax));
    return ratio(num, H1_norm(f, ctx.tmax) * xw_norm(g, rw, ctx.fam, ctx.tmax));
  }
  if (id == "T4.3i" || id == "APPX") {
    const double q = id == "APPX" ? 2.0 : p;
    ParaproductSpec spec = ctx.spec;
    if (id == "APPX") spec.modulation = Modulation::Alternating;
    const SampledField f = lp_input(ctx, seed) * scale;
    const SampledField g = xw_input(ctx, gseed);
    return ratio(jw_norm(pi(spec, f, g), rw, NormSpace::lebesgue(q)),
                 lp_norm(f, q) * xw_norm(g, rw, ctx.fam, ctx.tmax));
  }
  if (id == "T4.3ii-pi1") {
    const SampledField f = hardy_input(ctx, seed) * scale;
    const SampledField g = xw_input(ctx, gseed);
    return ratio(jw_norm(pi1(ctx.spec, f, g), rw, NormSpace::hardy(), &ctx.tmax),
                 H1_norm(f, ctx.tmax) * xw_norm(g, rw, ctx.fam, ctx.tmax));
  }
  if (id == "T4.3ii-pi2") {
    const SampledField f = hardy_input(ctx, seed) * scale;
    const SampledField g = xw_input(ctx, gseed);
    return ratio(lp_norm(pi2(ctx.spec, f, g), 1.0), H1_norm(f, ctx.tmax) * BMO_norm(g));
  }
  if (id == "L4.2i") {
    const SampledField f = xw_input(ctx, gseed) * scale;
    const SampledField g = lp_input(ctx, seed);
    return ratio(lp_norm(pi(ctx.spec, f, g), p),
                 xw_norm(f, rw, ctx.fam, ctx.tmax) * lp_norm(g, p));
  }
  if (id == "L4.2ii") {
    const SampledField f = xw_input(ctx, gseed) * scale;
    const SampledField g = hardy_input(ctx, seed);
    return ratio(lp_norm(pi(ctx.spec, f, g), 1.0),
                 xw_norm(f, rw, ctx.fam, ctx.tmax) * H1_norm(g, ctx.tmax));
  }
  if (id == "KP") {
    const SampledField f = lp_input(ctx, seed) * scale;
    const SampledField g = smooth_input(ctx, gseed);
    if (f.max_abs() == 0.0) return std::nullopt;
    return kato_ponce_ratio(f, g, ctx.cfg.s, p, ctx.w1);
  }
  if (id == "P6.2" || id == "NEG") {
    // atom sitting on the spike of g, at a width tied to the grid spacing
    const SampledField f =
        generate(FamilySpec{FamilyKind::DyadicAtom, 0.0, true, true}, ctx.grid, seed) * scale;
    const SampledField g = generate(FamilySpec{FamilyKind::BmoLogSpike}, ctx.grid, seed);
    const SampledField fg = product(f, g);
    const double num = id == "NEG" ? lp_norm(fg, p) : jw_norm(fg, ctx.w1, NormSpace::lebesgue(p));
    return ratio(num, lp_norm(f, p) * bmo_norm(g));
  }
  if (id == "P6.3" || id == "P6.3-b1" || id == "P6.3-b2") {
    const SampledField f = local_hardy_input(ctx, seed) * scale;
    const SampledField g = xw_input(ctx, gseed);
    const auto parts = product_decompose(ctx.spec, f, g);
    const double den = h1_norm(f, ctx.tmax) * bmo_norm(g);
    const double b1 = lp_norm(parts.b1, 1.0);
    const double b2 = id == "P6.3-b1" ? 0.0
                                      : jw_norm(parts.b2, ctx.w1, NormSpace::hardy(), &ctx.tmax);
    if (id == "P6.3-b1") return ratio(b1, den);
    if (id == "P6.3-b2") return ratio(b2, den);
    return ratio(std::max(b1, b2), den);
  }
  throw Error(ErrorKind::Precondition, "unknown inequality id '" + id + "'");
}

ResolutionEntry run(const std::string& id, const Context& ctx, int trials, std::uint64_t seed) {
  ResolutionEntry e;
  e.N = ctx.grid.points();
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    const auto r = evaluate(id, ctx, s, 1.0);
    if (!r) {
      ++e.skipped;
      continue;
    }
    e.trials.push_back({i, s, *r});
  }
  return e;
}

}  // namespace

std::optional<double> trial_ratio(const std::string& id, const Grid& grid, std::uint64_t seed,
                                  const HarnessConfig& cfg, double f_scale) {
  require(is_known_id(id), "unknown inequality id '" + id + "'");
  const Context ctx(grid, cfg);
  return evaluate(id, ctx, seed, f_scale);
}

RatioReport estimate_ratio(const std::string& id, int trials, const Grid& grid,
                           std::uint64_t seed, const HarnessConfig& cfg) {
  require(is_known_id(id), "unknown inequality id '" + id + "'");
  require(trials >= 0, "trials must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  RatioReport r;
  r.id = id;
  r.seed = seed;
  r.config = config_to_json(cfg);
  if (trials > 0) r.resolutions.push_back(run(id, Context(grid, cfg), trials, seed));
  r.finalize();
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RatioReport resolution_sweep(const std::string& id, const std::vector<int>& Ns, int trials,
                             std::uint64_t seed, const HarnessConfig& cfg) {
  require(std::is_sorted(Ns.begin(), Ns.end()), "resolution_sweep: Ns must ascend");
  const auto start = std::chrono::steady_clock::now();
  RatioReport r;
  r.id = id;
  r.seed = seed;
  r.config = config_to_json(cfg);
  for (int N : Ns) {
    const auto part = estimate_ratio(id, trials, Grid(cfg.dimension, N, cfg.side), seed, cfg);
    r.resolutions.insert(r.resolutions.end(), part.resolutions.begin(), part.resolutions.end());
  }
  r.finalize();
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace cmlab
