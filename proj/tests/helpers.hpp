#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "stochcube/latin.hpp"
#include "stochcube/polytope.hpp"
#include "stochcube/tensor.hpp"
#include "stochcube/tensor_io.hpp"

namespace stochcube::testing {

// Shipped reference cubes. E is stochastic with no positive diagonal yet
// extreme; F has a positive diagonal but is not a combination of
// permutation tensors.
inline constexpr const char* kTensorEText = R"(3

0 1/2 1/2
1/2 1/2 0
1/2 0 1/2

1/2 1/2 0
0 1/2 1/2
1/2 0 1/2

1/2 0 1/2
1/2 0 1/2
0 1 0
)";

inline constexpr const char* kTensorFText = R"(3

0 0.6 0.4
0.6 0 0.4
0.4 0.4 0.2

1 0 0
0 0.4 0.6
0 0.6 0.4

0 0.4 0.6
0.4 0.6 0
0.6 0 0.4
)";

inline Tensor3 tensor_E() { return parse_tensor_text(kTensorEText); }
inline Tensor3 tensor_F() { return parse_tensor_text(kTensorFText); }

// The canonical positive-diagonal witness of F.
inline LatinSquare f_witness_square() {
  return LatinSquare::from_rows({{2, 1, 3}, {1, 3, 2}, {3, 2, 1}});
}

inline std::string fixture_dir() {
  if (const char* dir = std::getenv("STOCHCUBE_FIXTURE_DIR")) return dir;
  return "fixtures";
}

inline Rational random_nonneg_rational(std::mt19937_64& rng, unsigned max_num = 12,
                                       unsigned max_den = 12) {
  return Rational(Integer(rng() % (max_num + 1)), Integer(rng() % max_den + 1));
}

inline Rational random_signed_rational(std::mt19937_64& rng, unsigned max_num = 12,
                                       unsigned max_den = 12) {
  const Rational value = random_nonneg_rational(rng, max_num, max_den);
  return rng() % 2 == 0 ? value : -value;
}

inline Tensor3 random_nonneg_tensor(int n, std::mt19937_64& rng) {
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n * n);
  for (Rational& value : entries) value = random_nonneg_rational(rng);
  return Tensor3(n, std::move(entries));
}

inline Tensor3 random_signed_tensor(int n, std::mt19937_64& rng) {
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n * n);
  for (Rational& value : entries) value = random_signed_rational(rng);
  return Tensor3(n, std::move(entries));
}

// Random convex combination of all permutation tensors of order n.
inline Tensor3 random_stochastic_tensor(int n, std::mt19937_64& rng) {
  static thread_local std::vector<std::vector<Tensor3>> cache;
  if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(n + 1);
  if (cache[n].empty()) cache[n] = permutation_tensors(n);
  return random_convex_combination(cache[n], rng);
}

}  // namespace stochcube::testing
