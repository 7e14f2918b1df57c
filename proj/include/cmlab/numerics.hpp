#pragma once

#include <span>
#include <vector>

namespace cmlab::numerics {

/// Finite-difference weights for the `order`-th derivative at 0 from samples
/// at the given integer offsets (Fornberg's recursion). Multiply by h^-order.
std::vector<double> fd_weights(int order, std::span<const int> offsets);

/// Symmetric stencil -m..m with m chosen so the scheme is 4th-order accurate.
std::vector<int> central_offsets(int order);

double median(std::vector<double> values);

}  // namespace cmlab::numerics
