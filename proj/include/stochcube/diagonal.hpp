#pragma once

#include <optional>
#include <vector>

#include "stochcube/latin.hpp"
#include "stochcube/tensor.hpp"

namespace stochcube {

// Guard for the exhaustive witness enumeration, which filters all Latin
// squares of the given order.
inline constexpr int kDefaultDiagonalCap = 4;

// A diagonal of a cube: n^2 positions with no two on a common line, encoded
// by the Latin square selecting position (square.at(j,k), j, k) for every
// cell (j, k).
struct DiagonalWitness {
  LatinSquare square;
};

// True iff the cube is strictly positive at every selected position. No
// tolerance: positive means > 0 exactly.
bool is_positive_diagonal(const Tensor3& t, const DiagonalWitness& witness);

// Finds a diagonal whose selected entries are all positive, or nullopt when
// none exists. Exact backtracking over cells with row/column masks and a
// forward feasibility check; cells are assigned in row-major order with
// symbols tried in increasing order, so the first hit is the
// lexicographically least witness (the canonical one).
std::optional<DiagonalWitness> find_positive_diagonal(const Tensor3& t);

// Every positive-diagonal witness, in lexicographic order, obtained by
// filtering all Latin squares of order n against the support of t. Throws
// GuardError when n exceeds `cap`. `jobs` > 1 splits the filtering across
// that many threads; the output is identical to the single-threaded order.
std::vector<DiagonalWitness> enumerate_positive_diagonals(const Tensor3& t,
                                                          int cap = kDefaultDiagonalCap,
                                                          int jobs = 1);

// Stochastic and possessing a positive diagonal.
bool in_L(const Tensor3& t);

}  // namespace stochcube
