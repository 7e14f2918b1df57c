#pragma once

// Periodic grid on the torus [0, L)^n, n in {1, 2}, and the sampled/spectral
// field types every operator in the library acts on.
//
// Conventions:
//   sample points   x_k  = k L / N,                 k in {0..N-1}^n
//   wavenumbers     k    in [-N/2, N/2)^n           (stored in FFT order)
//   frequencies     xi_k = 2 pi k / L
//   forward         fhat_k = (L/N)^n sum_x f(x) e^{-i xi_k x}
//   inverse         f(x)   = L^{-n} sum_k fhat_k e^{i xi_k x}
// so Parseval reads (L/N)^n sum |f|^2 = L^{-n} sum |fhat|^2.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace cmlab {

using complex = std::complex<double>;

/// Physical frequency vector; `y` is unused (zero) in one dimension.
struct Frequency {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  /// Japanese bracket (1 + |xi|^2)^{1/2}.
  double bracket() const { return std::sqrt(1.0 + x * x + y * y); }
};

class Grid {
 public:
  static constexpr double kDefaultSide = 16.0;

  Grid(int dimension, int points_per_axis, double box_side = kDefaultSide);

  int dimension() const { return dim_; }
  int points() const { return n_; }
  double side() const { return side_; }
  std::size_t size() const { return dim_ == 1 ? std::size_t(n_) : std::size_t(n_) * n_; }

  double spacing() const { return side_ / n_; }
  double cell_volume() const { return std::pow(spacing(), dim_); }
  double volume() const { return std::pow(side_, dim_); }

  /// Signed wavenumber of FFT-ordered index i on one axis.
  int wavenumber(int i) const { return i < n_ / 2 ? i : i - n_; }
  /// FFT-ordered index of a signed wavenumber in [-N/2, N/2).
  int index_of(int k) const { return k >= 0 ? k : k + n_; }

  double frequency(int k) const { return 2.0 * std::numbers::pi * k / side_; }
  Frequency frequency_at(std::size_t flat) const;
  std::array<int, 2> wavevector_at(std::size_t flat) const;
  std::array<double, 2> position_at(std::size_t flat) const;

  /// Largest |xi| on the discrete frequency set.
  double max_frequency() const;
  /// Smallest nonzero |xi|.
  double min_frequency() const { return 2.0 * std::numbers::pi / side_; }

  /// |xi_k| for every flat index (FFT order); cached per call site by users.
  std::vector<double> radial_frequencies() const;

  /// Same dimension and side, `factor` times as many points per axis.
  Grid refined(int factor) const;

  bool operator==(const Grid& o) const {
    return dim_ == o.dim_ && n_ == o.n_ && side_ == o.side_;
  }

 private:
  int dim_;
  int n_;
  double side_;
};

/// Complex samples f(x_k) in row-major order (first axis slowest).
struct SampledField {
  Grid grid;
  std::vector<complex> values;

  explicit SampledField(const Grid& g) : grid(g), values(g.size()) {}
  SampledField(const Grid& g, std::vector<complex> v);

  static SampledField constant(const Grid& g, complex c);

  std::size_t size() const { return values.size(); }
  complex& operator[](std::size_t i) { return values[i]; }
  const complex& operator[](std::size_t i) const { return values[i]; }

  bool is_finite() const;
  double max_abs() const;

  SampledField& operator+=(const SampledField& o);
  SampledField& operator-=(const SampledField& o);
  SampledField& operator*=(complex c);
};

SampledField operator+(SampledField a, const SampledField& b);
SampledField operator-(SampledField a, const SampledField& b);
SampledField operator*(SampledField a, complex c);
SampledField operator*(complex c, SampledField a);
/// Pointwise product of samples; aliases if the product is not resolved.
SampledField pointwise(const SampledField& a, const SampledField& b);

/// Fourier coefficients fhat_k in FFT order.
struct SpectralField {
  Grid grid;
  std::vector<complex> coefficients;

  explicit SpectralField(const Grid& g) : grid(g), coefficients(g.size()) {}
  SpectralField(const Grid& g, std::vector<complex> c);

  std::size_t size() const { return coefficients.size(); }
  complex& operator[](std::size_t i) { return coefficients[i]; }
  const complex& operator[](std::size_t i) const { return coefficients[i]; }

  /// Coefficient at signed wavevector (k1, k2); k2 ignored in 1-D.
  complex& at(int k1, int k2 = 0);
  const complex& at(int k1, int k2 = 0) const;
};

SpectralField dft(const SampledField& f);
SampledField idft(const SpectralField& F);

/// Rectangle rule (L/N)^n sum f, exact for trigonometric polynomials.
complex integrate(const SampledField& f);

/// Embeds F into a grid with factor*N points per axis (same L).
SpectralField zero_pad(const SpectralField& F, int factor);
/// Keeps the coefficients of F whose wavenumbers fit on `target`.
SpectralField truncate(const SpectralField& F, const Grid& target);

/// Zeroes every coefficient with max_i |k_i| >= cutoff.
void band_limit(SpectralField& F, int cutoff);

/// Throws a precondition error if the grids differ.
void require_same_grid(const Grid& a, const Grid& b);

}  // namespace cmlab
