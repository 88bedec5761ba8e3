#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "stochcube/diagonal.hpp"
#include "stochcube/errors.hpp"
#include "stochcube/linalg.hpp"
#include "stochcube/polytope.hpp"
#include "stochcube/stochastic.hpp"

using namespace stochcube;
using namespace stochcube::testing;

// Regression value fixed after the double description and the exhaustive
// basis enumeration agreed on the full vertex set.
constexpr std::size_t kOmega3VertexCount = 66;

TEST_CASE("perturb_toward hits the endpoints exactly") {
  const Tensor3 p = permutation_tensors(3).front();
  const Tensor3 e = tensor_E();
  CHECK(perturb_toward(p, e, Rational(1)) == p);
  CHECK(perturb_toward(p, e, Rational(0)) == e);
  const Tensor3 mid = perturb_toward(p, e, Rational(1, 2));
  CHECK(is_stochastic(mid));
  CHECK(find_positive_diagonal(mid).has_value());
  CHECK_THROWS_AS(perturb_toward(p, e, Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(perturb_toward(p, e, Rational(-1, 10)), DomainError);
  CHECK_THROWS_AS(perturb_toward(p, uniform_tensor(2), Rational(1, 2)), DimensionError);
  CHECK_THROWS_AS(perturb_toward(Rational(2) * p, e, Rational(1, 2)), DomainError);
}

TEST_CASE("blends approach the second endpoint at rate 1/m") {
  const Tensor3 p = permutation_tensors(3).front();
  const Tensor3 e = tensor_E();
  Rational max_gap(0);
  for (std::size_t c = 0; c < e.entries().size(); ++c) {
    const Rational gap = abs(p.entries()[c] - e.entries()[c]);
    if (gap > max_gap) max_gap = gap;
  }
  for (int m = 1; m <= 10; ++m) {
    const Tensor3 blend = perturb_toward(p, e, Rational(1, m));
    for (std::size_t c = 0; c < e.entries().size(); ++c) {
      CHECK(abs(blend.entries()[c] - e.entries()[c]) <= Rational(1, m) * max_gap);
    }
  }
}

TEST_CASE("dimension is the cube of n minus one") {
  CHECK(dimension(1) == 0);
  CHECK(dimension(2) == 1);
  CHECK(dimension(3) == 8);
  CHECK(dimension(4) == 27);
  CHECK_THROWS_AS(dimension(0), DimensionError);
}

TEST_CASE("extreme point test") {
  for (const Tensor3& p : permutation_tensors(2)) CHECK(is_extreme(p));
  for (const Tensor3& p : permutation_tensors(3)) CHECK(is_extreme(p));
  CHECK(is_extreme(tensor_E()));
  CHECK_FALSE(is_extreme(uniform_tensor(3)));
  CHECK(is_extreme(uniform_tensor(1)));

  const std::vector<Tensor3> perms = permutation_tensors(3);
  const Tensor3 mid = Rational(1, 2) * perms[0] + Rational(1, 2) * perms[5];
  CHECK_FALSE(is_extreme(mid));
  CHECK_THROWS_AS(is_extreme(Rational(2) * uniform_tensor(2)), DomainError);
}

TEST_CASE("membership certificates recombine exactly") {
  std::mt19937_64 rng(20240612);
  for (int trial = 0; trial < 25; ++trial) {
    const Tensor3 t = random_stochastic_tensor(3, rng);
    const DecompositionCertificate certificate = membership_delta(t);
    REQUIRE(certificate.feasible);
    Rational total(0);
    Tensor3 recombined = Tensor3::zeros(3);
    for (const auto& [square, weight] : certificate.terms) {
      CHECK(weight > 0);
      total += weight;
      recombined = recombined + weight * latin_to_tensor(square);
    }
    CHECK(total == 1);
    CHECK(recombined == t);
    // Membership in the permutation polytope implies a positive diagonal.
    CHECK(in_L(t));
  }
}

TEST_CASE("permutation tensors decompose as themselves") {
  for (const LatinSquare& square : enumerate_latin_squares(3)) {
    const DecompositionCertificate certificate = membership_delta(latin_to_tensor(square));
    REQUIRE(certificate.feasible);
    REQUIRE(certificate.terms.size() == 1);
    CHECK(certificate.terms.front().first == square);
    CHECK(certificate.terms.front().second == 1);
  }
}

TEST_CASE("the uniform cube is the average of all permutation tensors") {
  const std::vector<Tensor3> perms = permutation_tensors(3);
  Tensor3 average = Tensor3::zeros(3);
  for (const Tensor3& p : perms) average = average + Rational(1, 12) * p;
  CHECK(average == uniform_tensor(3));
  CHECK(membership_delta(uniform_tensor(3)).feasible);
}

TEST_CASE("the reference cubes lie outside the permutation polytope") {
  CHECK_FALSE(membership_delta(tensor_E()).feasible);
  CHECK_FALSE(membership_delta(tensor_F()).feasible);
  CHECK(in_L(tensor_F()));  // strictness: F separates the two inclusions
}

TEST_CASE("membership preconditions") {
  CHECK_THROWS_AS(membership_delta(Rational(2) * uniform_tensor(3)), DomainError);
  CHECK_THROWS_AS(membership_delta(uniform_tensor(3), 2), GuardError);
}

TEST_CASE("vertex enumeration for tiny sides") {
  const VertexSet trivial = enumerate_vertices(1);
  CHECK(trivial.count() == 1);
  CHECK(trivial.vertices.front() == uniform_tensor(1));

  const VertexSet segment = enumerate_vertices(2);
  CHECK(segment.count() == 2);
  CHECK(segment.permutation_count() == 2);
  const std::vector<Tensor3> perms2 = permutation_tensors(2);
  CHECK(std::set<std::vector<Rational>>{segment.vertices[0].entries(),
                                        segment.vertices[1].entries()} ==
        std::set<std::vector<Rational>>{perms2[0].entries(), perms2[1].entries()});
}

TEST_CASE("both enumeration methods agree on tiny sides") {
  for (int n = 1; n <= 2; ++n) {
    const VertexSet direct = enumerate_vertices(n);
    const VertexSet exhaustive = enumerate_vertices_exhaustive(n);
    CHECK(direct.vertices == exhaustive.vertices);
  }
}

TEST_CASE("order-3 vertex set: frozen count and structure") {
  const VertexSet vertices = enumerate_vertices(3);
  CHECK(vertices.count() == kOmega3VertexCount);
  CHECK(vertices.permutation_count() == 12);

  // Canonically sorted, duplicate-free.
  for (std::size_t v = 1; v < vertices.count(); ++v) {
    CHECK(lex_less(vertices.vertices[v - 1], vertices.vertices[v]));
  }

  // Contains E and every permutation tensor.
  const Tensor3 e = tensor_E();
  bool has_e = false;
  for (const Tensor3& vertex : vertices.vertices) has_e = has_e || vertex == e;
  CHECK(has_e);
  for (const Tensor3& p : permutation_tensors(3)) {
    bool found = false;
    for (const Tensor3& vertex : vertices.vertices) found = found || vertex == p;
    CHECK(found);
  }

  for (const Tensor3& vertex : vertices.vertices) {
    CHECK(is_stochastic(vertex));
    CHECK(is_extreme(vertex));
    CHECK(active_hyperplane_count(vertex) >= 27);
  }

  // Observed structure, frozen alongside the count: every vertex is
  // half-integral, permutation tensors have 18 zero entries, and the 54
  // remaining vertices have 10.
  std::size_t with_18_zeros = 0;
  for (const Tensor3& vertex : vertices.vertices) {
    int zeros = 0;
    for (const Rational& value : vertex.entries()) {
      CHECK(boost::multiprecision::denominator(value) <= 2);
      zeros += value == 0 ? 1 : 0;
    }
    CHECK((zeros == 10 || zeros == 18));
    with_18_zeros += zeros == 18 ? 1 : 0;
    CHECK((zeros == 18) == is_permutation_tensor(vertex));
  }
  CHECK(with_18_zeros == 12);

  // Midpoints of distinct vertices are never extreme.
  std::mt19937_64 rng(20240613);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t a = rng() % vertices.count();
    const std::size_t b = rng() % vertices.count();
    if (a == b) continue;
    const Tensor3 mid =
        Rational(1, 2) * vertices.vertices[a] + Rational(1, 2) * vertices.vertices[b];
    CHECK_FALSE(is_extreme(mid));
  }
}

TEST_CASE("the affine hull of the order-3 vertices has dimension 8") {
  const VertexSet vertices = enumerate_vertices(3);
  RatMatrix differences;
  for (std::size_t v = 1; v < vertices.count(); ++v) {
    const Tensor3 diff = vertices.vertices[v] - vertices.vertices.front();
    differences.push_back(diff.entries());
  }
  CHECK(rank(differences) == 8);

  const VertexSet segment = enumerate_vertices(2);
  RatMatrix segment_diff = {(segment.vertices[1] - segment.vertices[0]).entries()};
  CHECK(rank(segment_diff) == 1);
}

TEST_CASE("vertex enumeration guards") {
  CHECK_THROWS_AS(enumerate_vertices(4), GuardError);
  CHECK_THROWS_AS(enumerate_vertices(5, {.allow_large = true}), GuardError);
  CHECK_THROWS_AS(enumerate_vertices(0), DimensionError);
  CHECK_THROWS_AS(enumerate_vertices_exhaustive(4), GuardError);
}

TEST_CASE("random members of the polytope stay inside it") {
  std::mt19937_64 rng(20240614);
  const VertexSet vertices = enumerate_vertices(3);
  const ConstraintSystem reduced = constraint_system(3, true);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 t = random_convex_combination(vertices.vertices, rng);
    CHECK(is_stochastic(t));
    CHECK(satisfies(t, reduced));
  }
  CHECK_THROWS_AS(random_convex_combination({}, rng), DomainError);
}

TEST_CASE("order-2 members always decompose and have positive diagonals") {
  std::mt19937_64 rng(20240615);
  const VertexSet segment = enumerate_vertices(2);
  for (int trial = 0; trial < 25; ++trial) {
    const Tensor3 t = random_convex_combination(segment.vertices, rng);
    CHECK(membership_delta(t).feasible);
    CHECK(in_L(t));
  }
}
