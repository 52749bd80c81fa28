#pragma once

#include <cstddef>
#include <span>

namespace ppx {

// Pairwise (cascade) summation. Deterministic for a given element order and
// accurate to O(log n) rounding growth; all loss reductions go through this
// with row-major element order.
inline double pairwise_sum(std::span<const double> values) {
  const size_t n = values.size();
  if (n <= 16) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace ppx
