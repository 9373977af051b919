#pragma once

#include <utility>
#include <vector>

namespace skewchar {

/// Fraction-free Gaussian elimination (Bareiss) over an integral domain.
///
/// `entries` is an n x n row-major matrix, consumed in place. `is_zero`
/// tests ring zero, `div_exact(a, b)` returns a / b where b is known to
/// divide a. Every k x k leading minor of the pivoted matrix appears as a
/// pivot, so each division below is exact in the ring.
template <class T, class IsZero, class DivExact>
T bareiss_determinant(std::vector<T> entries, int n, IsZero is_zero, DivExact div_exact) {
  if (n == 0) return T(1);
  auto at = [&](int r, int c) -> T& { return entries[static_cast<std::size_t>(r) * n + c]; };
  bool negate = false;
  T prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero(at(k, k))) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!is_zero(at(r, k))) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return T(0);
      for (int c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      negate = !negate;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        T num = at(k, k) * at(r, c) - at(r, k) * at(k, c);
        at(r, c) = div_exact(num, prev);
      }
    }
    prev = at(k, k);
  }
  T det = at(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace skewchar
