#pragma once

#include <vector>

#include "stochcube/tensor.hpp"

namespace stochcube {

// Default enumeration guard. Order 5 already has 161280 squares; raising the
// cap is an explicit opt-in.
inline constexpr int kDefaultLatinCap = 5;

// n x n array over {1..n} in which every row and every column is a
// permutation. Cell (j, k) stores a first index i, so a square is exactly a
// diagonal selector for a cube: it picks the n^2 positions (at(j,k), j, k),
// no two of which share a line. Rows are indexed by j, columns by k.
class LatinSquare {
 public:
  // Validates the Latin property; throws DomainError on violation.
  static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int j, int k) const;

  // Row-major cells: cells()[(j-1)*n + (k-1)] = at(j, k).
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const LatinSquare& a, const LatinSquare& b) = default;

 private:
  friend std::vector<LatinSquare> enumerate_latin_squares(int n, int cap);
  LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {}

  int n_ = 0;
  std::vector<int> cells_;
};

// Lexicographic comparison of the row-major cells (orders compared first).
bool lex_less(const LatinSquare& a, const LatinSquare& b);

// The square with at(j, k) = ((j + k - 2) mod n) + 1.
LatinSquare cyclic_latin_square(int n);

// The 0/1 cube supported on the square's selected positions: entry
// (i, j, k) = 1 iff at(j, k) = i. Always stochastic.
Tensor3 latin_to_tensor(const LatinSquare& square);

// Inverse of latin_to_tensor; throws DomainError unless the input is a
// permutation tensor.
LatinSquare tensor_to_latin(const Tensor3& t);

// Every entry 0 or 1, and stochastic.
bool is_permutation_tensor(const Tensor3& t);

// All Latin squares of order n, each exactly once, in lexicographic order of
// the row-major cells. Throws GuardError when n exceeds `cap`.
std::vector<LatinSquare> enumerate_latin_squares(int n, int cap = kDefaultLatinCap);

// enumerate_latin_squares mapped through latin_to_tensor.
std::vector<Tensor3> permutation_tensors(int n, int cap = kDefaultLatinCap);

}  // namespace stochcube
