#include "stochcube/latin.hpp"

#include <cstdint>
#include <string>

#include "stochcube/errors.hpp"
#include "stochcube/stochastic.hpp"

namespace stochcube {

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw DomainError("latin square must have positive order");
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= n; ++j) {
    const auto& row = rows[j - 1];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw DomainError("latin square row " + std::to_string(j) + " must have " +
                        std::to_string(n) + " cells");
    }
    std::vector<bool> seen(n + 1, false);
    for (int value : row) {
      if (value < 1 || value > n) {
        throw DomainError("latin square symbol " + std::to_string(value) + " out of range 1.." +
                          std::to_string(n));
      }
      if (seen[value]) {
        throw DomainError("latin square row " + std::to_string(j) + " repeats symbol " +
                          std::to_string(value));
      }
      seen[value] = true;
      cells.push_back(value);
    }
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<bool> seen(n + 1, false);
    for (int j = 1; j <= n; ++j) {
      const int value = cells[static_cast<std::size_t>(j - 1) * n + (k - 1)];
      if (seen[value]) {
        throw DomainError("latin square column " + std::to_string(k) + " repeats symbol " +
                          std::to_string(value));
      }
      seen[value] = true;
    }
  }
  return LatinSquare(n, std::move(cells));
}

int LatinSquare::at(int j, int k) const {
  if (j < 1 || j > n_ || k < 1 || k > n_) {
    throw DimensionError("latin square cell (" + std::to_string(j) + "," + std::to_string(k) +
                         ") out of range 1.." + std::to_string(n_));
  }
  return cells_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)];
}

bool lex_less(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.cells() < b.cells();
}

LatinSquare cyclic_latin_square(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) rows[j - 1][k - 1] = (j + k - 2) % n + 1;
  return LatinSquare::from_rows(rows);
}

Tensor3 latin_to_tensor(const LatinSquare& square) {
  const int n = square.order();
  Tensor3 t = Tensor3::zeros(n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) t.at(square.at(j, k), j, k) = 1;
  return t;
}

LatinSquare tensor_to_latin(const Tensor3& t) {
  if (!is_permutation_tensor(t)) {
    throw DomainError("tensor_to_latin: input is not a permutation tensor");
  }
  const int n = t.side();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        if (t.at(i, j, k) == 1) rows[j - 1][k - 1] = i;
  return LatinSquare::from_rows(rows);
}

bool is_permutation_tensor(const Tensor3& t) {
  for (const Rational& value : t.entries()) {
    if (value != 0 && value != 1) return false;
  }
  return is_stochastic(t);
}

std::vector<LatinSquare> enumerate_latin_squares(int n, int cap) {
  if (n < 1) throw DimensionError("latin square order must be positive, got " + std::to_string(n));
  if (n > cap) {
    throw GuardError("latin square enumeration for order " + std::to_string(n) +
                     " exceeds the cap " + std::to_string(cap) + "; raise the cap explicitly");
  }
  if (n > 31) throw GuardError("latin square enumeration beyond order 31 is unsupported");

  std::vector<LatinSquare> out;
  std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::uint32_t> row_used(n + 1, 0);
  std::vector<std::uint32_t> col_used(n + 1, 0);

  // Cells are filled in row-major (j, k) order with symbols tried in
  // increasing order, so squares are emitted directly in lexicographic
  // order.
  const int total = n * n;
  auto fill = [&](auto&& self, int cell) -> void {
    if (cell == total) {
      out.push_back(LatinSquare(n, cells));
      return;
    }
    const int j = cell / n + 1;
    const int k = cell % n + 1;
    for (int symbol = 1; symbol <= n; ++symbol) {
      const std::uint32_t bit = 1u << symbol;
      if ((row_used[j] & bit) || (col_used[k] & bit)) continue;
      row_used[j] |= bit;
      col_used[k] |= bit;
      cells[cell] = symbol;
      self(self, cell + 1);
      row_used[j] &= ~bit;
      col_used[k] &= ~bit;
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<Tensor3> permutation_tensors(int n, int cap) {
  std::vector<Tensor3> out;
  for (const LatinSquare& square : enumerate_latin_squares(n, cap)) {
    out.push_back(latin_to_tensor(square));
  }
  return out;
}

}  // namespace stochcube
