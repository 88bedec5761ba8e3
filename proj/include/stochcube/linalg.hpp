#pragma once

#include <optional>
#include <vector>

#include "stochcube/rational.hpp"

namespace stochcube {

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact rank by Gaussian elimination over the rationals; no thresholds.
std::size_t rank(RatMatrix m);

// Solves a x = b for square a; nullopt when a is singular.
std::optional<std::vector<Rational>> solve_square(RatMatrix a, std::vector<Rational> b);

// Exact inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> inverse(RatMatrix a);

}  // namespace stochcube
