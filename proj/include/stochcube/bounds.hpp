#pragma once

#include <optional>

#include "stochcube/rational.hpp"

namespace stochcube {

Integer factorial(unsigned n);

// Exact binomial coefficient; 0 when k < 0 or k > n.
Integer binomial(long long n, long long k);

// Number of half-spaces defining the stochastic polytope when each equality
// is counted as two inequalities: p(n) = n^3 + 6n^2 - 6n + 2.
Integer defining_halfspace_count(int n);

// Number of independent line functionals: 3n^2 - 3n + 1.
Integer independent_line_count(int n);

// Upper bound C(p(n), n^3 - 1) / n^3 on the vertex count of the stochastic
// polytope, as an exact rational.
Rational vertex_count_upper_bound(int n);

// Lower bound (n!)^{2n} / n^{n^2} on the vertex count, as an exact rational.
Rational vertex_count_lower_bound(int n);

struct BoundsReport {
  int n = 0;
  Integer p;                  // defining_halfspace_count(n)
  Integer independent_lines;  // 3n^2 - 3n + 1
  Rational lower;
  Rational upper;
  std::optional<Integer> enumerated_count;
};

// Assembles the report. When a count is supplied, the sandwich
// lower <= count <= upper is enforced; a violation would falsify this
// implementation and throws IntegrityError.
BoundsReport bounds_report(int n, std::optional<Integer> enumerated_count = std::nullopt);

}  // namespace stochcube
