#include "stochcube/tensor.hpp"

#include <string>
#include <utility>

#include "stochcube/errors.hpp"

namespace stochcube {

namespace {

void require_same_side(const Tensor3& a, const Tensor3& b, const char* what) {
  if (a.side() != b.side()) {
    throw DimensionError(std::string(what) + ": side lengths differ (" +
                         std::to_string(a.side()) + " vs " + std::to_string(b.side()) + ")");
  }
}

void require_index(int value, int n, const char* name) {
  if (value < 1 || value > n) {
    throw DimensionError(std::string("index ") + name + "=" + std::to_string(value) +
                         " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

Tensor3::Tensor3(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  const std::size_t expected = static_cast<std::size_t>(n) * n * n;
  if (entries_.size() != expected) {
    throw DimensionError("expected " + std::to_string(expected) + " entries for side " +
                         std::to_string(n) + ", got " + std::to_string(entries_.size()));
  }
}

Tensor3 Tensor3::zeros(int n) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  return Tensor3(n, std::vector<Rational>(static_cast<std::size_t>(n) * n * n, Rational(0)));
}

std::size_t Tensor3::index(int i, int j, int k) const {
  require_index(i, n_, "i");
  require_index(j, n_, "j");
  require_index(k, n_, "k");
  return (static_cast<std::size_t>(k - 1) * n_ + (i - 1)) * n_ + (j - 1);
}

bool lex_less(const Tensor3& a, const Tensor3& b) {
  if (a.side() != b.side()) return a.side() < b.side();
  return a.entries() < b.entries();
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  require_same_side(a, b, "tensor addition");
  std::vector<Rational> sum = a.entries();
  for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += b.entries()[c];
  return Tensor3(a.side(), std::move(sum));
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  require_same_side(a, b, "tensor subtraction");
  std::vector<Rational> diff = a.entries();
  for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= b.entries()[c];
  return Tensor3(a.side(), std::move(diff));
}

Tensor3 operator*(const Rational& scalar, const Tensor3& t) {
  std::vector<Rational> scaled = t.entries();
  for (Rational& value : scaled) value *= scalar;
  return Tensor3(t.side(), std::move(scaled));
}

Tensor3 uniform_tensor(int n) {
  if (n < 1) throw DimensionError("side length must be positive, got " + std::to_string(n));
  return Tensor3(n, std::vector<Rational>(static_cast<std::size_t>(n) * n * n, Rational(1, n)));
}

Matrix slice(const Tensor3& t, Mode fixed_mode, int index) {
  const int n = t.side();
  require_index(index, n, "slice");
  Matrix out(n, std::vector<Rational>(n));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      switch (fixed_mode) {
        case Mode::I: out[r - 1][c - 1] = t.at(index, r, c); break;
        case Mode::J: out[r - 1][c - 1] = t.at(r, index, c); break;
        case Mode::K: out[r - 1][c - 1] = t.at(r, c, index); break;
      }
    }
  }
  return out;
}

std::vector<Rational> line(const Tensor3& t, Mode free_mode, int fixed_a, int fixed_b) {
  const int n = t.side();
  require_index(fixed_a, n, "fixed_a");
  require_index(fixed_b, n, "fixed_b");
  std::vector<Rational> out(n);
  for (int v = 1; v <= n; ++v) {
    switch (free_mode) {
      case Mode::I: out[v - 1] = t.at(v, fixed_a, fixed_b); break;
      case Mode::J: out[v - 1] = t.at(fixed_a, v, fixed_b); break;
      case Mode::K: out[v - 1] = t.at(fixed_a, fixed_b, v); break;
    }
  }
  return out;
}

LineVec vec_lines(const Tensor3& t) {
  const int n = t.side();
  LineVec vec;
  vec.n = n;
  vec.values.reserve(3 * static_cast<std::size_t>(n) * n * n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i) vec.values.push_back(t.at(i, j, k));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) vec.values.push_back(t.at(i, j, k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) vec.values.push_back(t.at(i, j, k));
  return vec;
}

Tensor3 tensor_from_line_vec(const LineVec& v) {
  const int n = v.n;
  if (n < 1) throw DimensionError("line vector side length must be positive");
  const std::size_t cube = static_cast<std::size_t>(n) * n * n;
  if (v.values.size() != 3 * cube) {
    throw DimensionError("line vector must have 3n^3 = " + std::to_string(3 * cube) +
                         " components, got " + std::to_string(v.values.size()));
  }
  Tensor3 t = Tensor3::zeros(n);
  std::size_t pos = 0;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i) t.at(i, j, k) = v.values[pos++];
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        if (t.at(i, j, k) != v.values[pos++]) {
          throw DomainError("line vector groups disagree: not a valid line vectorization");
        }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (t.at(i, j, k) != v.values[pos++]) {
          throw DomainError("line vector groups disagree: not a valid line vectorization");
        }
  return t;
}

Rational inner(const Tensor3& a, const Tensor3& b) {
  require_same_side(a, b, "inner product");
  Rational sum(0);
  for (std::size_t c = 0; c < a.entries().size(); ++c) sum += a.entries()[c] * b.entries()[c];
  return sum;
}

FlatSlices flatten(const Tensor3& t) {
  FlatSlices out;
  out.n = t.side();
  out.blocks.reserve(out.n);
  for (int k = 1; k <= out.n; ++k) out.blocks.push_back(slice(t, Mode::K, k));
  return out;
}

Tensor3 unflatten(const FlatSlices& f) {
  const int n = f.n;
  if (n < 1) throw DimensionError("flat slices side length must be positive");
  if (f.blocks.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("expected " + std::to_string(n) + " blocks, got " +
                         std::to_string(f.blocks.size()));
  }
  Tensor3 t = Tensor3::zeros(n);
  for (int k = 1; k <= n; ++k) {
    const Matrix& block = f.blocks[k - 1];
    if (block.size() != static_cast<std::size_t>(n)) {
      throw DimensionError("block " + std::to_string(k) + " must have " + std::to_string(n) +
                           " rows");
    }
    for (int i = 1; i <= n; ++i) {
      if (block[i - 1].size() != static_cast<std::size_t>(n)) {
        throw DimensionError("block " + std::to_string(k) + " row " + std::to_string(i) +
                             " must have " + std::to_string(n) + " columns");
      }
      for (int j = 1; j <= n; ++j) t.at(i, j, k) = block[i - 1][j - 1];
    }
  }
  return t;
}

}  // namespace stochcube
