#include <algorithm>
#include <bitset>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stochcube/errors.hpp"
#include "stochcube/linalg.hpp"
#include "stochcube/polytope.hpp"
#include "stochcube/stochastic.hpp"

namespace stochcube {

namespace {

// Working in the reduced coordinates t indexed by (a, b, c) in [1..n-1]^3,
// a member of the polytope is x(i,j,k) = 1/n + sum_t f_a(i) f_b(j) f_c(k) t,
// with f_a(i) = [i == a] - [i == n]. The f-products span exactly the
// tensors with all line sums zero, so the equalities are built in and only
// the nonnegativity facets remain: one inequality per entry,
// n*x(i,j,k) = 1 + sum coef*t >= 0, with integer coefficients n*f-product.
struct ReducedFacets {
  int n = 0;
  int dim = 0;  // (n-1)^3
  // One row per entry in canonical (k, i, j) order; length dim + 1 with the
  // homogenizing coordinate first: row = [1, coef...]. For a lifted point
  // y = (s, t*s), dot(row, y) = s * n * x(i,j,k).
  std::vector<std::vector<Integer>> rows;
};

int f_delta(int index, int at, int n) { return (index == at ? 1 : 0) - (index == n ? 1 : 0); }

ReducedFacets build_reduced_facets(int n) {
  ReducedFacets facets;
  facets.n = n;
  const int side = n - 1;
  facets.dim = side * side * side;
  facets.rows.reserve(static_cast<std::size_t>(n) * n * n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        std::vector<Integer> row;
        row.reserve(facets.dim + 1);
        row.emplace_back(1);
        for (int a = 1; a <= side; ++a)
          for (int b = 1; b <= side; ++b)
            for (int c = 1; c <= side; ++c)
              row.emplace_back(n * f_delta(i, a, n) * f_delta(j, b, n) * f_delta(k, c, n));
        facets.rows.push_back(std::move(row));
      }
    }
  }
  return facets;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer sum = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] != 0 && b[c] != 0) sum += a[c] * b[c];
  }
  return sum;
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (Integer& x : v) x /= g;
  }
  return v;
}

// Tensor whose entries are dot(row_c, y) / (n * y0) for a lifted ray y with
// positive homogenizing coordinate.
Tensor3 tensor_from_ray(const ReducedFacets& facets, const std::vector<Integer>& ray) {
  const Integer scale = facets.n * ray[0];
  std::vector<Rational> entries;
  entries.reserve(facets.rows.size());
  for (const auto& row : facets.rows) entries.emplace_back(dot(row, ray), scale);
  return Tensor3(facets.n, std::move(entries));
}

VertexSet finalize_vertex_set(int n, std::vector<Tensor3> vertices, const char* method) {
  for (const Tensor3& vertex : vertices) {
    if (!is_stochastic(vertex)) {
      throw IntegrityError(std::string(method) + ": produced a non-stochastic vertex");
    }
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const Tensor3& a, const Tensor3& b) { return lex_less(a, b); });
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    if (vertices[v - 1] == vertices[v]) {
      throw IntegrityError(std::string(method) + ": produced a duplicate vertex");
    }
  }
  return VertexSet{n, std::move(vertices)};
}

using RowSet = std::bitset<128>;

struct Ray {
  std::vector<Integer> v;
  RowSet zero;
};

RowSet zero_set(const std::vector<std::vector<Integer>>& rows, const std::vector<Integer>& v) {
  RowSet zero;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (dot(rows[r], v) == 0) zero.set(r);
  }
  return zero;
}

// Double description: start from a simplicial cone spanned by a row basis
// and insert the remaining half-spaces one at a time, keeping the extreme
// rays. Adjacency of two rays is decided combinatorially: no third ray may
// be active on every processed row the pair shares.
std::vector<Ray> double_description(const std::vector<std::vector<Integer>>& rows, int d) {
  const std::size_t m = rows.size();
  if (m > 128) throw IntegrityError("double_description: row set exceeds the bitset width");

  // Greedy initial basis: the first d linearly independent rows.
  std::vector<std::size_t> basis_rows;
  RatMatrix chosen;
  for (std::size_t r = 0; r < m && basis_rows.size() < static_cast<std::size_t>(d); ++r) {
    RatMatrix candidate = chosen;
    candidate.emplace_back(rows[r].begin(), rows[r].end());
    if (rank(candidate) == candidate.size()) {
      chosen = std::move(candidate);
      basis_rows.push_back(r);
    }
  }
  if (basis_rows.size() != static_cast<std::size_t>(d)) {
    throw IntegrityError("double_description: constraint rows do not span the space");
  }

  const auto basis_inverse = inverse(chosen);
  if (!basis_inverse) throw IntegrityError("double_description: basis inversion failed");

  std::vector<Ray> rays;
  RowSet processed;
  for (std::size_t r : basis_rows) processed.set(r);
  for (int column = 0; column < d; ++column) {
    std::vector<Rational> direction(d);
    Integer denominator_lcm = 1;
    for (int r = 0; r < d; ++r) {
      direction[r] = (*basis_inverse)[r][column];
      denominator_lcm = boost::multiprecision::lcm(
          denominator_lcm, boost::multiprecision::denominator(direction[r]));
    }
    std::vector<Integer> v(d);
    for (int r = 0; r < d; ++r) {
      v[r] = boost::multiprecision::numerator(direction[r]) *
             (denominator_lcm / boost::multiprecision::denominator(direction[r]));
    }
    v = primitive(std::move(v));
    rays.push_back(Ray{std::move(v), {}});
    rays.back().zero = zero_set(rows, rays.back().v);
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (processed.test(r)) continue;
    std::vector<Integer> values(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      values[i] = dot(rows[r], rays[i].v);
      if (values[i] > 0) {
        plus.push_back(i);
      } else if (values[i] == 0) {
        zero.push_back(i);
      } else {
        minus.push_back(i);
      }
    }
    if (!minus.empty()) {
      std::vector<Ray> created;
      for (std::size_t p : plus) {
        for (std::size_t q : minus) {
          const RowSet common = rays[p].zero & rays[q].zero & processed;
          if (common.count() + 2 < static_cast<std::size_t>(d)) continue;
          bool adjacent = true;
          for (std::size_t w = 0; w < rays.size(); ++w) {
            if (w == p || w == q) continue;
            if ((common & ~rays[w].zero).none()) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          Ray fresh;
          fresh.v.resize(rays[p].v.size());
          for (std::size_t c = 0; c < fresh.v.size(); ++c) {
            fresh.v[c] = values[p] * rays[q].v[c] - values[q] * rays[p].v[c];
          }
          fresh.v = primitive(std::move(fresh.v));
          fresh.zero = zero_set(rows, fresh.v);
          created.push_back(std::move(fresh));
        }
      }
      std::vector<Ray> next;
      next.reserve(plus.size() + zero.size() + created.size());
      for (std::size_t i : plus) next.push_back(std::move(rays[i]));
      for (std::size_t i : zero) next.push_back(std::move(rays[i]));
      for (Ray& ray : created) next.push_back(std::move(ray));
      std::set<std::vector<Integer>> unique;
      for (const Ray& ray : next) {
        if (!unique.insert(ray.v).second) {
          throw IntegrityError("double_description: duplicate ray generated");
        }
      }
      rays = std::move(next);
    }
    processed.set(r);
  }
  return rays;
}

VertexSet single_point_vertex_set(int n) {
  return VertexSet{n, {Tensor3(n, std::vector<Rational>(1, Rational(1)))}};
}

}  // namespace

VertexSet enumerate_vertices(int n, VertexEnumOptions options) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  if (n == 1) return single_point_vertex_set(n);
  if (n >= 5) {
    throw GuardError("vertex enumeration is not supported for side " + std::to_string(n));
  }
  if (n == 4 && !options.allow_large) {
    throw GuardError("vertex enumeration for side 4 requires the long-running override");
  }

  const ReducedFacets facets = build_reduced_facets(n);
  std::vector<std::vector<Integer>> rows = facets.rows;
  {
    std::vector<Integer> s_row(facets.dim + 1, Integer(0));
    s_row[0] = 1;
    rows.push_back(std::move(s_row));
  }
  const std::vector<Ray> rays = double_description(rows, facets.dim + 1);

  std::vector<Tensor3> vertices;
  vertices.reserve(rays.size());
  for (const Ray& ray : rays) {
    if (ray.v[0] <= 0) {
      throw IntegrityError("enumerate_vertices: recession ray found; the polytope is bounded");
    }
    vertices.push_back(tensor_from_ray(facets, ray.v));
  }
  return finalize_vertex_set(n, std::move(vertices), "enumerate_vertices");
}

VertexSet enumerate_vertices_exhaustive(int n) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  if (n == 1) return single_point_vertex_set(n);
  if (n > 3) {
    throw GuardError("exhaustive vertex enumeration is only supported for side <= 3");
  }

  const ReducedFacets facets = build_reduced_facets(n);
  const int dim = facets.dim;
  const int m = static_cast<int>(facets.rows.size());

  // Unlifted facet rows: coeffs * t >= -1, equality when the entry is zero.
  std::vector<std::vector<Integer>> coeffs(m);
  for (int r = 0; r < m; ++r) {
    coeffs[r].assign(facets.rows[r].begin() + 1, facets.rows[r].end());
  }

  // Every vertex is the unique solution of some full-rank subset of dim
  // facet equalities, so visiting all independent subsets (fraction-free
  // incremental elimination, increasing row index) finds them all; the
  // feasible solutions are collected and deduplicated.
  std::vector<std::vector<Integer>> elim;
  std::vector<int> pivots;
  std::set<std::vector<Rational>> solutions;

  const auto reduce_row = [&](int row_index) -> std::vector<Integer> {
    std::vector<Integer> row(dim + 1);
    for (int c = 0; c < dim; ++c) row[c] = coeffs[row_index][c];
    row[dim] = -1;
    for (std::size_t level = 0; level < elim.size(); ++level) {
      const int pivot_col = pivots[level];
      if (row[pivot_col] == 0) continue;
      const std::vector<Integer>& pivot_row = elim[level];
      const Integer scale = pivot_row[pivot_col];
      const Integer factor = row[pivot_col];
      for (int c = 0; c <= dim; ++c) row[c] = scale * row[c] - factor * pivot_row[c];
      Integer content = 0;
      for (const Integer& x : row) content = boost::multiprecision::gcd(content, x);
      if (content > 1) {
        for (Integer& x : row) x /= content;
      }
    }
    return row;
  };

  const auto solve_and_collect = [&]() {
    std::vector<Rational> t(dim);
    for (int level = dim - 1; level >= 0; --level) {
      const std::vector<Integer>& row = elim[level];
      const int pivot_col = pivots[level];
      Rational acc(row[dim]);
      for (int c = 0; c < dim; ++c) {
        if (c != pivot_col && row[c] != 0) acc -= Rational(row[c]) * t[c];
      }
      t[pivot_col] = acc / Rational(row[pivot_col]);
    }
    for (int r = 0; r < m; ++r) {
      Rational value(0);
      for (int c = 0; c < dim; ++c) {
        if (coeffs[r][c] != 0) value += Rational(coeffs[r][c]) * t[c];
      }
      if (value < -1) return;
    }
    solutions.insert(std::move(t));
  };

  const auto visit = [&](auto&& self, int next_row) -> void {
    if (static_cast<int>(elim.size()) == dim) {
      solve_and_collect();
      return;
    }
    const int missing = dim - static_cast<int>(elim.size());
    for (int r = next_row; r <= m - missing; ++r) {
      std::vector<Integer> row = reduce_row(r);
      int pivot_col = -1;
      for (int c = 0; c < dim; ++c) {
        if (row[c] != 0) {
          pivot_col = c;
          break;
        }
      }
      if (pivot_col < 0) continue;  // dependent (or inconsistent): unusable
      elim.push_back(std::move(row));
      pivots.push_back(pivot_col);
      self(self, r + 1);
      elim.pop_back();
      pivots.pop_back();
    }
  };
  visit(visit, 0);

  std::vector<Tensor3> vertices;
  vertices.reserve(solutions.size());
  for (const std::vector<Rational>& t : solutions) {
    std::vector<Rational> entries;
    entries.reserve(m);
    for (int r = 0; r < m; ++r) {
      Rational value(1);
      for (int c = 0; c < dim; ++c) {
        if (coeffs[r][c] != 0) value += Rational(coeffs[r][c]) * t[c];
      }
      entries.push_back(value / n);
    }
    vertices.emplace_back(n, std::move(entries));
  }
  return finalize_vertex_set(n, std::move(vertices), "enumerate_vertices_exhaustive");
}

}  // namespace stochcube
