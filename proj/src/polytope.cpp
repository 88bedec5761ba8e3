#include "stochcube/polytope.hpp"

#include <algorithm>
#include <string>

#include "stochcube/errors.hpp"
#include "stochcube/linalg.hpp"
#include "stochcube/simplex.hpp"
#include "stochcube/stochastic.hpp"

namespace stochcube {

DecompositionCertificate membership_delta(const Tensor3& t, int cap) {
  if (!is_stochastic(t)) {
    throw DomainError("membership_delta: input tensor is not stochastic");
  }
  const int n = t.side();
  const std::vector<LatinSquare> squares = enumerate_latin_squares(n, cap);
  const std::size_t cube = static_cast<std::size_t>(n) * n * n;

  // One equality per entry plus the weight-sum row; one column per square.
  std::vector<std::vector<Rational>> m(cube + 1, std::vector<Rational>(squares.size(), Rational(0)));
  std::vector<Rational> rhs(cube + 1, Rational(1));
  for (std::size_t s = 0; s < squares.size(); ++s) {
    const LatinSquare& square = squares[s];
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        m[ConstraintSystem::column_index(n, square.at(j, k), j, k)][s] = 1;
    m[cube][s] = 1;
  }
  for (std::size_t c = 0; c < cube; ++c) rhs[c] = t.entries()[c];

  const FeasibilityResult lp = solve_equality_feasibility(std::move(m), std::move(rhs));
  if (!lp.feasible) return {};

  DecompositionCertificate certificate;
  certificate.feasible = true;
  Tensor3 recombined = Tensor3::zeros(n);
  Rational weight_sum(0);
  for (std::size_t s = 0; s < squares.size(); ++s) {
    const Rational& weight = lp.solution[s];
    if (weight == 0) continue;
    certificate.terms.emplace_back(squares[s], weight);
    weight_sum += weight;
    recombined = recombined + weight * latin_to_tensor(squares[s]);
  }
  if (weight_sum != 1 || !(recombined == t)) {
    throw IntegrityError("membership_delta: certificate failed validation");
  }
  return certificate;
}

bool is_extreme(const Tensor3& t) {
  if (!is_stochastic(t)) {
    throw DomainError("is_extreme: input tensor is not stochastic");
  }
  const int n = t.side();
  const std::size_t cube = static_cast<std::size_t>(n) * n * n;
  RatMatrix active = constraint_system(n, /*reduced=*/false).equality_matrix;
  for (std::size_t c = 0; c < cube; ++c) {
    if (t.entries()[c] != 0) continue;
    std::vector<Rational> row(cube, Rational(0));
    row[c] = 1;
    active.push_back(std::move(row));
  }
  return rank(std::move(active)) == cube;
}

int active_hyperplane_count(const Tensor3& t) {
  if (!is_stochastic(t)) {
    throw DomainError("active_hyperplane_count: input tensor is not stochastic");
  }
  const int n = t.side();
  int zeros = 0;
  for (const Rational& value : t.entries()) {
    if (value == 0) ++zeros;
  }
  return 3 * n * n - 3 * n + 1 + zeros;
}

std::size_t VertexSet::permutation_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), is_permutation_tensor));
}

Tensor3 perturb_toward(const Tensor3& p, const Tensor3& q, const Rational& t) {
  if (p.side() != q.side()) {
    throw DimensionError("perturb_toward: side lengths differ (" + std::to_string(p.side()) +
                         " vs " + std::to_string(q.side()) + ")");
  }
  if (t < 0 || t > 1) {
    throw DomainError("perturb_toward: t = " + format_rational(t) + " is outside [0, 1]");
  }
  if (!is_stochastic(p) || !is_stochastic(q)) {
    throw DomainError("perturb_toward: both endpoints must be stochastic");
  }
  return t * p + (Rational(1) - t) * q;
}

int dimension(int n) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  return (n - 1) * (n - 1) * (n - 1);
}

Tensor3 random_convex_combination(const std::vector<Tensor3>& generators, std::mt19937_64& rng) {
  if (generators.empty()) {
    throw DomainError("random_convex_combination: no generators");
  }
  // Raw engine words modulo a small range keep the draw reproducible across
  // platforms (distributions are not portable).
  std::vector<Integer> weights(generators.size());
  Integer total = 0;
  for (Integer& w : weights) {
    w = Integer(rng() % 65536);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  Tensor3 out = Tensor3::zeros(generators.front().side());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (weights[g] == 0) continue;
    out = out + Rational(weights[g], total) * generators[g];
  }
  return out;
}

}  // namespace stochcube
