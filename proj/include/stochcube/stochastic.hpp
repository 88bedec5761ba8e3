#pragma once

#include <string>
#include <vector>

#include "stochcube/tensor.hpp"

namespace stochcube {

// One line-sum functional: the sum over `mode` with the two remaining
// indices fixed at (a, b), listed in increasing mode order.
struct LineFunctional {
  Mode mode = Mode::I;
  int a = 0;
  int b = 0;
};

// H-representation data of the stochastic polytope: equality rows (one 0/1
// row per line functional, right-hand side 1) plus one implicit
// nonnegativity row per entry. Variable columns follow the canonical entry
// order (slice k outer, row i middle, column j inner), so exported systems
// are byte-stable.
//
// The reduced system keeps only independent functionals: all n^2 mode-I
// lines, the mode-J lines with i <= n-1, and the mode-K lines with
// i, j <= n-1, for 3n^2 - 3n + 1 rows. The full system carries all 3n^2
// functionals; its rank equals the reduced row count, and both systems cut
// out the same affine subspace.
struct ConstraintSystem {
  int n = 0;
  bool reduced = false;
  std::vector<LineFunctional> functionals;
  std::vector<std::vector<Rational>> equality_matrix;
  std::vector<Rational> equality_rhs;

  std::size_t rows() const { return equality_matrix.size(); }
  int nonneg_count() const { return n * n * n; }

  static std::size_t column_index(int n, int i, int j, int k) {
    return (static_cast<std::size_t>(k - 1) * n + (i - 1)) * n + (j - 1);
  }
};

ConstraintSystem constraint_system(int n, bool reduced);

// Nonnegative with every line sum equal to 1 (all 3n^2 lines).
bool is_stochastic(const Tensor3& t);

// Equivalent test through the line vectorization: nonnegative and every
// consecutive n-block of vec_lines sums to 1.
bool check_vec_characterization(const Tensor3& t);

// Doubly stochastic test for a square matrix through its row- and
// column-vectorizations: nonnegative, and every consecutive n-block of the
// stacked rows and of the stacked columns sums to 1.
bool matrix_vec_check(const Matrix& s);

// True iff the vectorized tensor satisfies every equality row exactly and
// every entry is nonnegative. Throws DimensionError on mismatched sides.
bool satisfies(const Tensor3& t, const ConstraintSystem& c);

// Exact rank of the equality matrix.
std::size_t equality_rank(const ConstraintSystem& c);

// Text export of the H-representation, one row per functional: a relation
// tag (E for equality, I for >= inequality), the n^3 coefficients, and the
// right-hand side as the last column.
std::string to_hrep_text(const ConstraintSystem& c);

}  // namespace stochcube
