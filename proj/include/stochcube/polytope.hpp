#pragma once

#include <random>
#include <utility>
#include <vector>

#include "stochcube/latin.hpp"
#include "stochcube/tensor.hpp"

namespace stochcube {

// Convex-combination certificate over permutation tensors. When feasible,
// the weights are strictly positive, sum to one, and the weighted sum of the
// squares' permutation tensors reproduces the target exactly (this is
// re-verified before the certificate is returned). When infeasible, terms is
// empty; infeasibility is certified by the exact phase-1 outcome.
struct DecompositionCertificate {
  bool feasible = false;
  std::vector<std::pair<LatinSquare, Rational>> terms;
};

// Membership of a stochastic tensor in the polytope spanned by the
// permutation tensors, decided by exact LP feasibility over one weight per
// Latin square of order n. Throws DomainError on non-stochastic input and
// GuardError when n exceeds the Latin enumeration cap.
DecompositionCertificate membership_delta(const Tensor3& t, int cap = kDefaultLatinCap);

// Vertex test through active constraints: the full equality system plus one
// row x = 0 per zero entry must have rank n^3. Throws DomainError on
// non-stochastic input.
bool is_extreme(const Tensor3& t);

// Number of defining hyperplanes active at a stochastic tensor: the reduced
// equality rows (all active at any member) plus one nonnegativity facet per
// zero entry. Every vertex lies on at least n^3 of them.
int active_hyperplane_count(const Tensor3& t);

struct VertexSet {
  int n = 0;
  // Lexicographically sorted by canonical entries, duplicate-free.
  std::vector<Tensor3> vertices;

  std::size_t count() const { return vertices.size(); }
  std::size_t permutation_count() const;
};

struct VertexEnumOptions {
  // n = 4 is refused unless set; expect a long run if you allow it.
  bool allow_large = false;
};

// All vertices of the order-n stochastic polytope, computed by the double
// description method over exact rationals on the reduced constraint system.
// Guarded to n <= 3 by default (n = 4 behind allow_large, n >= 5 refused).
VertexSet enumerate_vertices(int n, VertexEnumOptions options = {});

// Independent cross-check for n <= 3: solves every full-rank subset of
// nonnegativity facets as a linear system and keeps the feasible solutions.
// Algorithmically unrelated to the double description path; both must
// produce identical vertex sets.
VertexSet enumerate_vertices_exhaustive(int n);

// The convex combination t*p + (1-t)*q of two stochastic cubes of the same
// side, 0 <= t <= 1. The result is again stochastic.
Tensor3 perturb_toward(const Tensor3& p, const Tensor3& q, const Rational& t);

// Affine dimension of the stochastic polytope: n^3 minus the independent
// line count, i.e. (n-1)^3.
int dimension(int n);

// Exact random convex combination of the given generators; weights are drawn
// as integers from the engine and normalized, so results are reproducible
// for a fixed seed.
Tensor3 random_convex_combination(const std::vector<Tensor3>& generators, std::mt19937_64& rng);

}  // namespace stochcube
