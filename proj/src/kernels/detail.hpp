#pragma once

#include "cmlab/kernels.hpp"

namespace cmlab::kernels::detail {

inline int wrap(int i, int n) { return ((i % n) + n) % n; }

inline std::size_t flat(const Grid& g, int i1, int i2) {
  return g.dimension() == 1 ? std::size_t(wrap(i1, g.points()))
                            : std::size_t(wrap(i1, g.points())) * g.points() + wrap(i2, g.points());
}

// |(a, b)| h < t, the strict cone condition on grid offsets
inline bool in_aperture(int a, int b, double h, double t) {
  return double(a * a + b * b) * h * h < t * t;
}

inline bool in_tent(double t, double side) { return t <= side * (1.0 + 1e-12); }

void serial_bilinear_sum(const Grid&, const PairSymbol&, std::span<const complex>,
                         std::span<const complex>, double, std::span<complex>);
void parallel_bilinear_sum(const Grid&, const PairSymbol&, std::span<const complex>,
                           std::span<const complex>, double, std::span<complex>);

std::vector<double> serial_nontangential_max(const Grid&, const std::vector<std::vector<double>>&,
                                             const std::vector<double>&);
std::vector<double> parallel_nontangential_max(const Grid&,
                                               const std::vector<std::vector<double>>&,
                                               const std::vector<double>&);

std::vector<CubeStats> serial_cube_statistics(const Grid&, std::span<const complex>,
                                              std::span<const Cube>);
std::vector<CubeStats> parallel_cube_statistics(const Grid&, std::span<const complex>,
                                                std::span<const Cube>);

std::vector<double> serial_tent_masses(const Grid&, const std::vector<std::vector<double>>&,
                                       const std::vector<double>&, double, std::span<const Cube>);
std::vector<double> parallel_tent_masses(const Grid&, const std::vector<std::vector<double>>&,
                                         const std::vector<double>&, double,
                                         std::span<const Cube>);

CubeStats cube_stats_one(const Grid&, std::span<const complex>, const Cube&);

// Nonzero entries of a spectrum, as (flat index, wavevector).
struct Support {
  std::vector<std::size_t> index;
  std::vector<std::array<int, 2>> k;
};
Support nonzero_support(const Grid& g, std::span<const complex> a);

}  // namespace cmlab::kernels::detail
