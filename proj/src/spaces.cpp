#include "cmlab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "cmlab/error.hpp"
#include "cmlab/multipliers.hpp"

namespace cmlab {

double lp_norm(const SampledField& f, double p) {
  require(p >= 1.0, "lp_norm: p must be >= 1");
  if (std::isinf(p)) return f.max_abs();
  double s = 0.0;
  for (const auto& z : f.values) s += std::pow(std::abs(z), p);
  return std::pow(s * f.grid.cell_volume(), 1.0 / p);
}

DyadicCubeSet::DyadicCubeSet(const Grid& grid) {
  const int n = grid.points();
  const int dim = grid.dimension();
  for (int cells = n; cells >= 1; cells /= 2) {
    const double side = grid.spacing() * cells;
    const int count = n / cells;
    std::vector<int> shifts{0};
    if (cells >= 2 && count > 1) shifts.push_back(cells / 2);
    for (int sx : shifts) {
      for (int sy : dim == 2 ? shifts : std::vector<int>{0}) {
        for (int i = 0; i < count; ++i) {
          for (int k = 0; k < (dim == 2 ? count : 1); ++k) {
            cubes_.push_back(Cube{cells, i * cells + sx, k * cells + sy, side});
          }
        }
      }
    }
  }
}

std::vector<Cube> DyadicCubeSet::small_cubes() const {
  std::vector<Cube> out;
  for (const auto& q : cubes_) {
    if (q.side < 1.0) out.push_back(q);
  }
  return out;
}

std::vector<Cube> DyadicCubeSet::large_cubes() const {
  std::vector<Cube> out;
  for (const auto& q : cubes_) {
    if (q.side >= 1.0) out.push_back(q);
  }
  return out;
}

std::vector<double> mollified_maximal_function(const SampledField& f, const TimeGrid& tgrid,
                                               double t_cap, bool strict,
                                               kernels::Backend backend) {
  const SpectralField F = dft(f);
  std::vector<std::vector<double>> rows;
  std::vector<double> apertures;
  for (double t : tgrid.times()) {
    if (strict ? t >= t_cap : t > t_cap) break;
    SpectralField Ft = F;
    multiply_radial(Ft, [t](double r) { return mollifier_hat(t * r); });
    const SampledField v = idft(Ft);
    std::vector<double> row(v.size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::abs(v[i]);
    rows.push_back(std::move(row));
    apertures.push_back(t);
  }
  require(!rows.empty(), "maximal function: no scale below the cap");
  return kernels::nontangential_max(backend, f.grid, rows, apertures);
}

namespace {

double integrate_real(const std::vector<double>& v, const Grid& g) {
  double s = 0.0;
  for (double x : v) s += x;
  return s * g.cell_volume();
}

}  // namespace

double h1_norm(const SampledField& f, const TimeGrid& tgrid) {
  return integrate_real(mollified_maximal_function(f, tgrid, 0.5, true), f.grid);
}

double H1_norm(const SampledField& f, const TimeGrid& tgrid) {
  const double mean = std::abs(integrate(f));
  if (mean > 1e-8 * lp_norm(f, 1.0) * f.grid.volume() && mean > 1e-300) {
    std::clog << "warning: H1_norm of a field with nonzero mean " << mean << "\n";
  }
  return integrate_real(mollified_maximal_function(f, tgrid, 0.5 * f.grid.side(), false),
                        f.grid);
}

double BMO_norm(const SampledField& f) {
  const DyadicCubeSet set(f.grid);
  double m = 0.0;
  for (const auto& s : kernels::cube_statistics(kernels::Backend::Parallel, f.grid, f.values,
                                                set.cubes())) {
    m = std::max(m, s.mean_oscillation);
  }
  return m;
}

double bmo_norm(const SampledField& f) {
  const DyadicCubeSet set(f.grid);
  double osc = 0.0;
  for (const auto& s : kernels::cube_statistics(kernels::Backend::Parallel, f.grid, f.values,
                                                set.small_cubes())) {
    osc = std::max(osc, s.mean_oscillation);
  }
  double size = 0.0;
  for (const auto& s : kernels::cube_statistics(kernels::Backend::Parallel, f.grid, f.values,
                                                set.large_cubes())) {
    size = std::max(size, s.mean_abs);
  }
  return osc + size;
}

double xw_norm(const SampledField& f, const RegularizedWeight& rw, const LPFamily& fam,
               const TimeGrid& tgrid) {
  const SpectralField F = dft(f);
  double low = 0.0;
  for (double t : tgrid.times()) {
    if (t > 0.5 * f.grid.side()) break;
    SpectralField Ft = F;
    multiply_radial(Ft, [&](double r) { return fam.phi(t * r); });
    low = std::max(low, idft(Ft).max_abs() / rw.source()(t));
  }
  return BMO_norm(f) + low;
}

double jw_norm(const SampledField& f, const RegularizedWeight& rw, const NormSpace& space,
               const TimeGrid* tgrid) {
  const SampledField g = j_w_inv(rw, f);
  switch (space.kind) {
    case NormSpace::Kind::Lp:
      return lp_norm(g, space.p);
    case NormSpace::Kind::Hardy:
      require(tgrid != nullptr, "jw_norm: Hardy space needs a time grid");
      return H1_norm(g, *tgrid);
    case NormSpace::Kind::BMO:
      return BMO_norm(g);
  }
  return 0.0;
}

double refined_sobolev_norm(const SampledField& f, double b) {
  const SpectralField F = dft(f);
  double s = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double w = std::pow(1.0 + std::log(F.grid.frequency_at(i).bracket()), b);
    s += std::norm(w * F[i]);
  }
  return std::sqrt(s / f.grid.volume());
}

double triebel_norm(const SampledField& f, const RegularizedWeight& rw, double p) {
  require(p > 1.0 && std::isfinite(p), "triebel_norm: p must be in (1, inf)");
  const SpectralField F = dft(f);
  const int top = int(std::ceil(std::log2(std::max(f.grid.max_frequency(), 1.0)))) + 2;
  std::vector<double> square(f.size(), 0.0);
  for (int j = 0; j <= top; ++j) {
    SpectralField Fj = F;
    multiply_radial(Fj, [&](double r) { return rw.resolution().phi(j, r); });
    const SampledField piece = idft(Fj);
    const double wj = rw.source()(std::ldexp(1.0, -j));
    for (std::size_t i = 0; i < square.size(); ++i) square[i] += std::norm(piece[i]) / (wj * wj);
  }
  double s = 0.0;
  for (double v : square) s += std::pow(v, 0.5 * p);
  return std::pow(s * f.grid.cell_volume(), 1.0 / p);
}

}  // namespace cmlab
