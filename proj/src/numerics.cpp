#include "cmlab/numerics.hpp"

#include <algorithm>

#include "cmlab/error.hpp"

namespace cmlab::numerics {

std::vector<double> fd_weights(int order, std::span<const int> offsets) {
  const int n = int(offsets.size());
  require(order >= 0 && order < n, "fd_weights: stencil too small for derivative order");
  // c[i][k]: weight of node i for the k-th derivative, built node by node.
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    const int mn = std::min(i, order);
    for (int j = 0; j < i; ++j) {
      const double c3 = double(offsets[i]) - double(offsets[j]);
      c2 *= c3;
      for (int k = mn; k >= 0; --k) {
        const double prev_i = k > 0 ? c[i - 1][k - 1] : 0.0;
        if (j == i - 1) {
          c[i][k] = c1 * (k * prev_i - double(offsets[i - 1]) * c[i - 1][k]) / c2;
        }
        const double prev_j = k > 0 ? c[j][k - 1] : 0.0;
        c[j][k] = (double(offsets[i]) * c[j][k] - k * prev_j) / c3;
      }
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

std::vector<int> central_offsets(int order) {
  const int m = order == 0 ? 0 : (order - 1) / 2 + 2;
  std::vector<int> off;
  for (int i = -m; i <= m; ++i) off.push_back(i);
  return off;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  const double lo = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lo + hi);
}

}  // namespace cmlab::numerics
