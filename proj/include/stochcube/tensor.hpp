#pragma once

#include <vector>

#include "stochcube/rational.hpp"

namespace stochcube {

// The three index directions of a cube. Mode::I runs over the first index,
// Mode::J over the second, Mode::K over the third.
enum class Mode { I, J, K };

using Matrix = std::vector<std::vector<Rational>>;

// Dense n x n x n cube of exact rationals, addressed 1-based as at(i, j, k).
//
// The construction vector and entries() use the flattened-slice reading
// order: slice k = 1..n outermost, row i = 1..n, column j = 1..n innermost.
// Constraint-system columns and the canonical ordering of vertex sets use
// the same order, so every certificate is byte-reproducible.
class Tensor3 {
 public:
  Tensor3(int n, std::vector<Rational> entries);

  static Tensor3 zeros(int n);

  int side() const { return n_; }
  const Rational& at(int i, int j, int k) const { return entries_[index(i, j, k)]; }
  Rational& at(int i, int j, int k) { return entries_[index(i, j, k)]; }

  // Canonical entry vector (k outer, i middle, j inner).
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j, int k) const;

  int n_ = 0;
  std::vector<Rational> entries_;
};

// Lexicographic comparison of the canonical entry vectors (sides compared
// first).
bool lex_less(const Tensor3& a, const Tensor3& b);

Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator*(const Rational& scalar, const Tensor3& t);

// Cube with every entry 1/n (the barycenter of the stochastic polytope).
Tensor3 uniform_tensor(int n);

// Two-dimensional section with one index fixed. The remaining indices keep
// their relative order: slice(T, Mode::I, a)[j-1][k-1] = T(a, j, k),
// slice(T, Mode::J, b)[i-1][k-1] = T(i, b, k),
// slice(T, Mode::K, c)[i-1][j-1] = T(i, j, c).
Matrix slice(const Tensor3& t, Mode fixed_mode, int index);

// One-dimensional section (fiber, tube): all indices but one fixed. The two
// fixed indices are given in increasing mode order, e.g.
// line(T, Mode::J, i, k) is the fiber (T(i, 1, k), ..., T(i, n, k)).
std::vector<Rational> line(const Tensor3& t, Mode free_mode, int fixed_a, int fixed_b);

// All 3n^2 lines of a cube stacked into one vector of 3n^3 components:
// mode-I lines first, their (j, k) pairs in row-major order (j outer), then
// mode-J lines ((i, k) row-major), then mode-K lines ((i, j) row-major).
// Every entry of the cube appears exactly three times, once per group.
struct LineVec {
  int n = 0;
  std::vector<Rational> values;
};

LineVec vec_lines(const Tensor3& t);

// Inverse of vec_lines. Verifies that the three groups agree on every entry
// and throws DomainError when they do not.
Tensor3 tensor_from_line_vec(const LineVec& v);

// Entrywise inner product. Equals one third of the dot product of the two
// line vectors, since every entry is stacked three times.
Rational inner(const Tensor3& a, const Tensor3& b);

// Slice-by-slice planar form: blocks[k-1] = slice(t, Mode::K, k), i.e. the
// cube laid out as n square blocks with rows indexed by i and columns by j.
struct FlatSlices {
  int n = 0;
  std::vector<Matrix> blocks;
};

FlatSlices flatten(const Tensor3& t);

// Inverse of flatten. Throws DimensionError on malformed block shapes.
Tensor3 unflatten(const FlatSlices& f);

}  // namespace stochcube
