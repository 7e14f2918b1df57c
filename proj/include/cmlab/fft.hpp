#pragma once

#include <complex>
#include <span>

namespace cmlab::fft {

enum class Direction { Forward, Backward };

/// Unnormalized n-D complex transform (FFTW sign convention: Forward uses
/// e^{-i...}). `points` per axis, `dimension` axes, row-major data.
/// Plans are cached per shape; execution is safe from multiple threads.
void transform(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
               int dimension, int points, Direction dir);

}  // namespace cmlab::fft
