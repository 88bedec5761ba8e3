#include "stochcube/linalg.hpp"

#include <utility>

#include "stochcube/errors.hpp"

namespace stochcube {

namespace {

void require_rectangular(const RatMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw DimensionError("matrix rows have unequal lengths");
  }
}

}  // namespace

std::size_t rank(RatMatrix m) {
  if (m.empty() || m.front().empty()) return 0;
  require_rectangular(m);
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_square(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("solve_square: right-hand side length mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("solve_square: matrix is not square");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
      b[i] -= factor * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

std::optional<RatMatrix> inverse(RatMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("inverse: matrix is not square");
  }
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(inv[c], inv[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[c][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (j >= c) a[i][j] -= factor * a[c][j];
        inv[i][j] -= factor * inv[c][j];
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Rational pivot = a[r][r];
    for (std::size_t j = 0; j < n; ++j) inv[r][j] /= pivot;
  }
  return inv;
}

}  // namespace stochcube
