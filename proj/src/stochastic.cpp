#include "stochcube/stochastic.hpp"

#include <sstream>

#include "stochcube/errors.hpp"
#include "stochcube/linalg.hpp"

namespace stochcube {

namespace {

void append_row(ConstraintSystem& system, Mode mode, int a, int b) {
  const int n = system.n;
  std::vector<Rational> row(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (int v = 1; v <= n; ++v) {
    switch (mode) {
      case Mode::I: row[ConstraintSystem::column_index(n, v, a, b)] = 1; break;
      case Mode::J: row[ConstraintSystem::column_index(n, a, v, b)] = 1; break;
      case Mode::K: row[ConstraintSystem::column_index(n, a, b, v)] = 1; break;
    }
  }
  system.functionals.push_back({mode, a, b});
  system.equality_matrix.push_back(std::move(row));
  system.equality_rhs.emplace_back(1);
}

}  // namespace

ConstraintSystem constraint_system(int n, bool reduced) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  ConstraintSystem system;
  system.n = n;
  system.reduced = reduced;

  // Mode-I lines: all (j, k). With them in place, each k-slice needs only
  // n-1 of its mode-J lines (2n-1 functionals per doubly stochastic slice),
  // and the mode-K pillars with i = n or j = n are then determined as well.
  // Dropping the last row index instead of the last slice keeps the three
  // groups genuinely independent of one another.
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) append_row(system, Mode::I, j, k);
  // Mode-J lines: i <= n-1 in the reduced system, all k.
  for (int i = 1; i <= (reduced ? n - 1 : n); ++i)
    for (int k = 1; k <= n; ++k) append_row(system, Mode::J, i, k);
  // Mode-K lines: i, j <= n-1 in the reduced system.
  for (int i = 1; i <= (reduced ? n - 1 : n); ++i)
    for (int j = 1; j <= (reduced ? n - 1 : n); ++j) append_row(system, Mode::K, i, j);

  return system;
}

bool is_stochastic(const Tensor3& t) {
  const int n = t.side();
  for (const Rational& value : t.entries()) {
    if (value < 0) return false;
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      Rational sum(0);
      for (int i = 1; i <= n; ++i) sum += t.at(i, j, k);
      if (sum != 1) return false;
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      Rational sum(0);
      for (int j = 1; j <= n; ++j) sum += t.at(i, j, k);
      if (sum != 1) return false;
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational sum(0);
      for (int k = 1; k <= n; ++k) sum += t.at(i, j, k);
      if (sum != 1) return false;
    }
  }
  return true;
}

bool check_vec_characterization(const Tensor3& t) {
  for (const Rational& value : t.entries()) {
    if (value < 0) return false;
  }
  const LineVec vec = vec_lines(t);
  const int n = vec.n;
  for (std::size_t block = 0; block < vec.values.size(); block += n) {
    Rational sum(0);
    for (int offset = 0; offset < n; ++offset) sum += vec.values[block + offset];
    if (sum != 1) return false;
  }
  return true;
}

bool matrix_vec_check(const Matrix& s) {
  const std::size_t n = s.size();
  if (n == 0) throw DimensionError("matrix_vec_check: empty matrix");
  for (const auto& row : s) {
    if (row.size() != n) throw DimensionError("matrix_vec_check: matrix is not square");
  }
  for (const auto& row : s) {
    for (const Rational& value : row) {
      if (value < 0) return false;
    }
  }
  std::vector<Rational> row_vec;
  std::vector<Rational> col_vec;
  row_vec.reserve(n * n);
  col_vec.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) row_vec.push_back(s[r][c]);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) col_vec.push_back(s[r][c]);
  for (const auto* vec : {&row_vec, &col_vec}) {
    for (std::size_t block = 0; block < vec->size(); block += n) {
      Rational sum(0);
      for (std::size_t offset = 0; offset < n; ++offset) sum += (*vec)[block + offset];
      if (sum != 1) return false;
    }
  }
  return true;
}

bool satisfies(const Tensor3& t, const ConstraintSystem& c) {
  if (t.side() != c.n) {
    throw DimensionError("satisfies: tensor side " + std::to_string(t.side()) +
                         " does not match system side " + std::to_string(c.n));
  }
  const std::vector<Rational>& x = t.entries();
  for (const Rational& value : x) {
    if (value < 0) return false;
  }
  for (std::size_t r = 0; r < c.rows(); ++r) {
    Rational sum(0);
    const auto& row = c.equality_matrix[r];
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (row[col] != 0) sum += row[col] * x[col];
    }
    if (sum != c.equality_rhs[r]) return false;
  }
  return true;
}

std::size_t equality_rank(const ConstraintSystem& c) { return rank(c.equality_matrix); }

std::string to_hrep_text(const ConstraintSystem& c) {
  const int n = c.n;
  const int cube = n * n * n;
  std::ostringstream out;
  out << "# H-representation of the order-" << n << " stochastic-cube polytope\n";
  out << "# columns: x(i,j,k) with column index (k-1)*n^2 + (i-1)*n + (j-1); last column = rhs\n";
  out << "# rows: E <coeffs> <rhs> is an equality, I <coeffs> <rhs> means <coeffs>.x >= <rhs>\n";
  out << "n " << n << "\n";
  out << "columns " << cube << "\n";
  out << "equalities " << c.rows() << "\n";
  out << "inequalities " << cube << "\n";
  for (std::size_t r = 0; r < c.rows(); ++r) {
    out << 'E';
    for (const Rational& coeff : c.equality_matrix[r]) out << ' ' << format_rational(coeff);
    out << ' ' << format_rational(c.equality_rhs[r]) << "\n";
  }
  for (int col = 0; col < cube; ++col) {
    out << 'I';
    for (int other = 0; other < cube; ++other) out << ' ' << (other == col ? '1' : '0');
    out << " 0\n";
  }
  return out.str();
}

}  // namespace stochcube
