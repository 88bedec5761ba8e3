#include "stochcube/bounds.hpp"

#include <string>

#include "stochcube/errors.hpp"

namespace stochcube {

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned v = 2; v <= n; ++v) out *= v;
  return out;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer out = 1;
  // out stays integral after each step: the first t factors of a binomial
  // row are divisible by t!.
  for (long long t = 1; t <= k; ++t) {
    out *= n - k + t;
    out /= t;
  }
  return out;
}

namespace {

void require_positive_side(int n) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
}

}  // namespace

Integer defining_halfspace_count(int n) {
  require_positive_side(n);
  const Integer side = n;
  return side * side * side + 6 * side * side - 6 * side + 2;
}

Integer independent_line_count(int n) {
  require_positive_side(n);
  const Integer side = n;
  return 3 * side * side - 3 * side + 1;
}

Rational vertex_count_upper_bound(int n) {
  require_positive_side(n);
  const long long cube = static_cast<long long>(n) * n * n;
  const long long p = cube + 6LL * n * n - 6LL * n + 2;
  return Rational(binomial(p, cube - 1), Integer(cube));
}

Rational vertex_count_lower_bound(int n) {
  require_positive_side(n);
  const Integer numerator = boost::multiprecision::pow(factorial(static_cast<unsigned>(n)),
                                                       2 * static_cast<unsigned>(n));
  const Integer denominator =
      boost::multiprecision::pow(Integer(n), static_cast<unsigned>(n) * static_cast<unsigned>(n));
  return Rational(numerator, denominator);
}

BoundsReport bounds_report(int n, std::optional<Integer> enumerated_count) {
  require_positive_side(n);
  BoundsReport report;
  report.n = n;
  report.p = defining_halfspace_count(n);
  report.independent_lines = independent_line_count(n);
  report.lower = vertex_count_lower_bound(n);
  report.upper = vertex_count_upper_bound(n);
  report.enumerated_count = std::move(enumerated_count);
  if (report.enumerated_count) {
    const Rational count(*report.enumerated_count);
    if (count < report.lower || count > report.upper) {
      throw IntegrityError("bounds_report: enumerated count " +
                           report.enumerated_count->str() +
                           " violates the bound sandwich for n = " + std::to_string(n));
    }
  }
  return report;
}

}  // namespace stochcube
