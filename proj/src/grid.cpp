#include "cmlab/grid.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cmlab/error.hpp"
#include "cmlab/fft.hpp"

namespace cmlab {

Grid::Grid(int dimension, int points_per_axis, double box_side)
    : dim_(dimension), n_(points_per_axis), side_(box_side) {
  require(dim_ == 1 || dim_ == 2, "grid dimension must be 1 or 2");
  require(n_ >= 16 && std::has_single_bit(unsigned(n_)), "N must be a power of two >= 16");
  require(std::isfinite(side_) && side_ > 2.0, "box side L must exceed 2");
  require(dim_ == 1 ? n_ <= 4096 : n_ <= 256, "N too large for this dimension");
}

Frequency Grid::frequency_at(std::size_t flat) const {
  const auto k = wavevector_at(flat);
  return {frequency(k[0]), frequency(k[1])};
}

std::array<int, 2> Grid::wavevector_at(std::size_t flat) const {
  if (dim_ == 1) return {wavenumber(int(flat)), 0};
  return {wavenumber(int(flat / n_)), wavenumber(int(flat % n_))};
}

std::array<double, 2> Grid::position_at(std::size_t flat) const {
  const double h = spacing();
  if (dim_ == 1) return {h * double(flat), 0.0};
  return {h * double(flat / n_), h * double(flat % n_)};
}

double Grid::max_frequency() const {
  return frequency(n_ / 2) * (dim_ == 1 ? 1.0 : std::numbers::sqrt2);
}

std::vector<double> Grid::radial_frequencies() const {
  std::vector<double> r(size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = frequency_at(i).norm();
  return r;
}

Grid Grid::refined(int factor) const { return Grid(dim_, n_ * factor, side_); }

void require_same_grid(const Grid& a, const Grid& b) {
  require(a == b, "fields live on different grids");
}

SampledField::SampledField(const Grid& g, std::vector<complex> v) : grid(g), values(std::move(v)) {
  require(values.size() == grid.size(), "sample count does not match grid");
}

SampledField SampledField::constant(const Grid& g, complex c) {
  return SampledField(g, std::vector<complex>(g.size(), c));
}

bool SampledField::is_finite() const {
  return std::all_of(values.begin(), values.end(),
                     [](complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

double SampledField::max_abs() const {
  double m = 0.0;
  for (const auto& z : values) m = std::max(m, std::abs(z));
  return m;
}

SampledField& SampledField::operator+=(const SampledField& o) {
  require_same_grid(grid, o.grid);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

SampledField& SampledField::operator-=(const SampledField& o) {
  require_same_grid(grid, o.grid);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

SampledField& SampledField::operator*=(complex c) {
  for (auto& z : values) z *= c;
  return *this;
}

SampledField operator+(SampledField a, const SampledField& b) { return a += b; }
SampledField operator-(SampledField a, const SampledField& b) { return a -= b; }
SampledField operator*(SampledField a, complex c) { return a *= c; }
SampledField operator*(complex c, SampledField a) { return a *= c; }

SampledField pointwise(const SampledField& a, const SampledField& b) {
  require_same_grid(a.grid, b.grid);
  SampledField out(a.grid);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

SpectralField::SpectralField(const Grid& g, std::vector<complex> c)
    : grid(g), coefficients(std::move(c)) {
  require(coefficients.size() == grid.size(), "coefficient count does not match grid");
}

complex& SpectralField::at(int k1, int k2) {
  const std::size_t i = grid.index_of(k1);
  if (grid.dimension() == 1) return coefficients[i];
  return coefficients[i * grid.points() + grid.index_of(k2)];
}

const complex& SpectralField::at(int k1, int k2) const {
  return const_cast<SpectralField*>(this)->at(k1, k2);
}

SpectralField dft(const SampledField& f) {
  SpectralField F(f.grid);
  fft::transform(f.values, F.coefficients, f.grid.dimension(), f.grid.points(),
                 fft::Direction::Forward);
  const double scale = f.grid.cell_volume();
  for (auto& c : F.coefficients) c *= scale;
  return F;
}

SampledField idft(const SpectralField& F) {
  SampledField f(F.grid);
  fft::transform(F.coefficients, f.values, F.grid.dimension(), F.grid.points(),
                 fft::Direction::Backward);
  const double scale = 1.0 / F.grid.volume();
  for (auto& z : f.values) z *= scale;
  return f;
}

complex integrate(const SampledField& f) {
  complex s = 0.0;
  for (const auto& z : f.values) s += z;
  return s * f.grid.cell_volume();
}

namespace {

// Copies every coefficient of `src` whose wavevector is representable on `dst`.
void transfer(const SpectralField& src, SpectralField& dst) {
  const int half = std::min(src.grid.points(), dst.grid.points()) / 2;
  const int dim = src.grid.dimension();
  for (int k1 = -half; k1 < half; ++k1) {
    if (dim == 1) {
      dst.at(k1) = src.at(k1);
      continue;
    }
    for (int k2 = -half; k2 < half; ++k2) dst.at(k1, k2) = src.at(k1, k2);
  }
}

}  // namespace

SpectralField zero_pad(const SpectralField& F, int factor) {
  require(factor >= 2, "zero_pad factor must be >= 2");
  SpectralField out(F.grid.refined(factor));
  transfer(F, out);
  return out;
}

SpectralField truncate(const SpectralField& F, const Grid& target) {
  require(F.grid.dimension() == target.dimension() && F.grid.side() == target.side(),
          "truncate: incompatible grids");
  require(target.points() <= F.grid.points(), "truncate: target grid is finer");
  SpectralField out(target);
  transfer(F, out);
  return out;
}

void band_limit(SpectralField& F, int cutoff) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto k = F.grid.wavevector_at(i);
    if (std::max(std::abs(k[0]), std::abs(k[1])) >= cutoff) F[i] = 0.0;
  }
}

}  // namespace cmlab
