#include "stochcube/simplex.hpp"

#include <string>

#include "stochcube/errors.hpp"

namespace stochcube {

FeasibilityResult solve_equality_feasibility(std::vector<std::vector<Rational>> m,
                                             std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw DimensionError("simplex: right-hand side length mismatch");
  if (rows == 0) return {true, {}};
  const std::size_t vars = m.front().size();
  for (const auto& row : m) {
    if (row.size() != vars) throw DimensionError("simplex: matrix rows have unequal lengths");
  }

  const std::vector<std::vector<Rational>> original = m;
  const std::vector<Rational> original_rhs = rhs;

  // Tableau columns: vars original variables, then one artificial per row,
  // then the right-hand side. The starting basis is the artificials.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<Rational>> tableau(rows, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = rhs[r] < 0;
    for (std::size_t c = 0; c < vars; ++c) tableau[r][c] = flip ? -m[r][c] : m[r][c];
    tableau[r][vars + r] = 1;
    tableau[r][cols] = flip ? -rhs[r] : rhs[r];
    basis[r] = vars + r;
  }

  // Objective: minimize the sum of artificials. The reduced-cost row starts
  // as cost minus the column sums (all basic costs are 1); its right-hand
  // side carries minus the current objective value.
  std::vector<Rational> objective(cols + 1, Rational(0));
  for (std::size_t c = 0; c < cols; ++c) {
    Rational column_sum(0);
    for (std::size_t r = 0; r < rows; ++r) column_sum += tableau[r][c];
    objective[c] = (c < vars ? Rational(0) : Rational(1)) - column_sum;
  }
  for (std::size_t r = 0; r < rows; ++r) objective[cols] -= tableau[r][cols];

  for (;;) {
    // Bland: entering column = smallest index with negative reduced cost.
    std::size_t entering = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (objective[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == cols) break;

    // Ratio test, ties broken by the smallest basis variable index.
    std::size_t leaving = rows;
    Rational best_ratio(0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (tableau[r][entering] <= 0) continue;
      const Rational ratio = tableau[r][cols] / tableau[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) {
      // The phase-1 objective is bounded below by zero, so this cannot
      // happen on a well-formed tableau.
      throw IntegrityError("simplex: unbounded phase-1 objective");
    }

    const Rational pivot = tableau[leaving][entering];
    for (std::size_t c = 0; c <= cols; ++c) tableau[leaving][c] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || tableau[r][entering] == 0) continue;
      const Rational factor = tableau[r][entering];
      for (std::size_t c = 0; c <= cols; ++c) tableau[r][c] -= factor * tableau[leaving][c];
    }
    if (objective[entering] != 0) {
      const Rational factor = objective[entering];
      for (std::size_t c = 0; c <= cols; ++c) objective[c] -= factor * tableau[leaving][c];
    }
    basis[leaving] = entering;
  }

  const Rational objective_value = -objective[cols];
  if (objective_value != 0) return {false, {}};

  std::vector<Rational> solution(vars, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) solution[basis[r]] = tableau[r][cols];
  }
  for (std::size_t r = 0; r < rows; ++r) {
    Rational sum(0);
    for (std::size_t c = 0; c < vars; ++c) {
      if (original[r][c] != 0) sum += original[r][c] * solution[c];
    }
    if (sum != original_rhs[r]) {
      throw IntegrityError("simplex: recovered solution fails row " + std::to_string(r));
    }
  }
  return {true, std::move(solution)};
}

}  // namespace stochcube
