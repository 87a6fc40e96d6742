#pragma once

#include <cstddef>
#include <vector>

namespace rrkit {

/// Cofactor (Laplace) expansion along the first row. Division-free, so it
/// works over any commutative ring; intended for the small matrices that
/// appear in Wronskians.
template <typename T>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T acc = m[0][0] - m[0][0];
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    T term = m[0][col] * laplace_determinant(minor, one);
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace rrkit
