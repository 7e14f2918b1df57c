#include "cmlab/carleson.hpp"

#include <algorithm>
#include <cmath>

#include "cmlab/error.hpp"
#include "cmlab/spaces.hpp"

namespace cmlab {

TentFunction::TentFunction(const Grid& g, const TimeGrid& tg)
    : grid(g), tgrid(tg), rows(tg.size(), std::vector<complex>(g.size())) {}

TentFunction TentFunction::constant(const Grid& g, const TimeGrid& tg, complex c) {
  TentFunction out(g, tg);
  for (auto& r : out.rows) std::fill(r.begin(), r.end(), c);
  return out;
}

TentFunction tent_from_multiplier(const SampledField& f, const RadialProfile& m,
                                  const TimeGrid& tgrid) {
  TentFunction G(f.grid, tgrid);
  const SpectralField F = dft(f);
  for (std::size_t j = 0; j < tgrid.size(); ++j) {
    const double t = tgrid.times()[j];
    SpectralField Ft = F;
    multiply_radial(Ft, [&](double r) { return m(t * r); });
    G.rows[j] = idft(Ft).values;
  }
  return G;
}

namespace {

std::vector<std::vector<double>> density(const TentFunction& G) {
  std::vector<std::vector<double>> d(G.rows.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    d[j].resize(G.rows[j].size());
    for (std::size_t i = 0; i < d[j].size(); ++i) d[j][i] = std::norm(G.rows[j][i]);
  }
  return d;
}

}  // namespace

CarlesonResult carleson_norm(const TentFunction& G, kernels::Backend backend) {
  const DyadicCubeSet set(G.grid);
  const auto& cubes = set.cubes();
  const auto mass = kernels::tent_masses(backend, G.grid, density(G), G.tgrid.times(),
                                         G.grid.cell_volume() * G.tgrid.weight(), cubes);
  CarlesonResult best;
  best.witness = cubes.front();
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const double v = mass[i] / std::pow(cubes[i].side, G.grid.dimension());
    if (v > best.norm) {
      best.norm = v;
      best.witness = cubes[i];
    }
  }
  return best;
}

double bmo_carleson_ratio(const SampledField& g, const LPFamily& fam, const TimeGrid& tgrid) {
  const double b = BMO_norm(g);
  if (b == 0.0) throw Error(ErrorKind::DivideByZero, "bmo_carleson_ratio: g has zero BMO norm");
  const auto G = tent_from_multiplier(g, [&](double r) { return fam.psi1(r); }, tgrid);
  return carleson_norm(G).norm / (b * b);
}

double weighted_quadratic_energy(const SampledField& f, const RegularizedWeight& rw,
                                 const LPFamily& fam, const TimeGrid& tgrid) {
  const SpectralField F = dft(f);
  double s = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i] == complex(0.0)) continue;
    const double r = F.grid.frequency_at(i).norm();
    double band = 0.0;
    for (double t : tgrid.times()) {
      const double v = rw.source()(t) * fam.psi2(t * r);
      band += v * v;
    }
    const double w = rw(r);
    s += std::norm(F[i]) * band / (w * w);
  }
  return s * tgrid.weight() / f.grid.volume();
}

WeightedBandReport weighted_band_carleson(const SampledField& h, const RegularizedWeight& rw,
                                          const LPFamily& fam, const TimeGrid& tgrid,
                                          const std::vector<SampledField>& probes) {
  WeightedBandReport rep;
  auto band = [&](const SampledField& f) {
    TentFunction R = tent_from_multiplier(j_w_inv(rw, f), [&](double r) { return fam.psi2(r); },
                                          tgrid);
    for (std::size_t j = 0; j < R.rows.size(); ++j) {
      const double w = rw.source()(tgrid.times()[j]);
      for (auto& z : R.rows[j]) z *= w;
    }
    return R;
  };
  const TentFunction one = band(SampledField::constant(h.grid, 1.0));
  for (const auto& row : one.rows) {
    for (const auto& z : row) rep.constant_residual = std::max(rep.constant_residual, std::abs(z));
  }
  for (const auto& f : probes) {
    const double n2 = std::pow(lp_norm(f, 2.0), 2);
    if (n2 == 0.0) continue;
    rep.quadratic_constant =
        std::max(rep.quadratic_constant, weighted_quadratic_energy(f, rw, fam, tgrid) / n2);
  }
  const double b = BMO_norm(h);
  if (b > 0.0) rep.carleson_ratio = carleson_norm(band(h)).norm / (b * b);
  return rep;
}

double carleson_embedding_ratio(const TentFunction& F, const TentFunction& G, double p) {
  require(p >= 1.0 && p <= 4.0, "carleson_embedding_ratio: p must be in [1, 4]");
  require(F.grid == G.grid && F.tgrid.size() == G.tgrid.size(),
          "carleson_embedding_ratio: tent functions on different grids");
  const auto& times = F.tgrid.times();
  const double side = F.grid.side() * (1.0 + 1e-12);
  double num = 0.0;
  std::vector<std::vector<double>> rows;
  std::vector<double> apertures;
  for (std::size_t j = 0; j < times.size() && times[j] <= side; ++j) {
    std::vector<double> row(F.rows[j].size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = std::abs(F.rows[j][i]);
      num += std::pow(row[i], p) * std::norm(G.rows[j][i]);
    }
    rows.push_back(std::move(row));
    apertures.push_back(times[j]);
  }
  num *= F.grid.cell_volume() * F.tgrid.weight();
  const auto star = kernels::nontangential_max(kernels::Backend::Parallel, F.grid, rows, apertures);
  double integral = 0.0;
  for (double v : star) integral += std::pow(v, p);
  integral *= F.grid.cell_volume();
  const double cn = carleson_norm(G).norm;
  if (cn == 0.0 || integral == 0.0) {
    throw Error(ErrorKind::DivideByZero, "carleson_embedding_ratio: trivial input");
  }
  return num / (cn * integral);
}

}  // namespace cmlab
