#include "stochcube/diagonal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>

#include "stochcube/errors.hpp"
#include "stochcube/stochastic.hpp"

namespace stochcube {

bool is_positive_diagonal(const Tensor3& t, const DiagonalWitness& witness) {
  const int n = t.side();
  if (witness.square.order() != n) {
    throw DimensionError("witness order " + std::to_string(witness.square.order()) +
                         " does not match tensor side " + std::to_string(n));
  }
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (t.at(witness.square.at(j, k), j, k) <= 0) return false;
  return true;
}

std::optional<DiagonalWitness> find_positive_diagonal(const Tensor3& t) {
  const int n = t.side();
  if (n > 63) throw GuardError("positive-diagonal search beyond side 63 is unsupported");
  const int total = n * n;

  // support[cell] = bitmask of symbols i with a strictly positive entry.
  std::vector<std::uint64_t> support(total, 0);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        if (t.at(i, j, k) > 0) support[(j - 1) * n + (k - 1)] |= std::uint64_t{1} << i;

  std::vector<std::uint64_t> row_used(n + 1, 0);
  std::vector<std::uint64_t> col_used(n + 1, 0);
  std::vector<int> cells(total, 0);

  // Row-major cell order with ascending symbols: the first complete
  // assignment is the lexicographically least witness.
  auto search = [&](auto&& self, int cell) -> bool {
    if (cell == total) return true;
    const int j = cell / n + 1;
    const int k = cell % n + 1;
    std::uint64_t candidates = support[cell] & ~row_used[j] & ~col_used[k];
    while (candidates != 0) {
      const int symbol = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const std::uint64_t bit = std::uint64_t{1} << symbol;
      row_used[j] |= bit;
      col_used[k] |= bit;
      cells[cell] = symbol;
      bool viable = true;
      for (int later = cell + 1; later < total; ++later) {
        if ((support[later] & ~row_used[later / n + 1] & ~col_used[later % n + 1]) == 0) {
          viable = false;
          break;
        }
      }
      if (viable && self(self, cell + 1)) return true;
      row_used[j] &= ~bit;
      col_used[k] &= ~bit;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int cell = 0; cell < total; ++cell) rows[cell / n][cell % n] = cells[cell];
  return DiagonalWitness{LatinSquare::from_rows(rows)};
}

std::vector<DiagonalWitness> enumerate_positive_diagonals(const Tensor3& t, int cap, int jobs) {
  const int n = t.side();
  if (n > cap) {
    throw GuardError("positive-diagonal enumeration for side " + std::to_string(n) +
                     " exceeds the cap " + std::to_string(cap) + "; raise the cap explicitly");
  }
  const std::vector<LatinSquare> squares = enumerate_latin_squares(n, n);

  std::vector<char> keep(squares.size(), 0);
  const auto filter_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      keep[s] = is_positive_diagonal(t, DiagonalWitness{squares[s]}) ? 1 : 0;
    }
  };

  if (jobs <= 1 || squares.size() < 2) {
    filter_range(0, squares.size());
  } else {
    const std::size_t workers = std::min<std::size_t>(jobs, squares.size());
    std::vector<std::thread> pool;
    const std::size_t chunk = (squares.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(squares.size(), begin + chunk);
      if (begin < end) pool.emplace_back(filter_range, begin, end);
    }
    for (std::thread& worker : pool) worker.join();
  }

  std::vector<DiagonalWitness> out;
  for (std::size_t s = 0; s < squares.size(); ++s) {
    if (keep[s]) out.push_back(DiagonalWitness{squares[s]});
  }
  return out;
}

bool in_L(const Tensor3& t) {
  return is_stochastic(t) && find_positive_diagonal(t).has_value();
}

}  // namespace stochcube
