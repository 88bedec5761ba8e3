#pragma once

#include <string>
#include <string_view>

#include "stochcube/tensor.hpp"

namespace stochcube {

enum class TensorFormat { Json, Text };

// Text format: side length on the first line, then the n flattened slices,
// each as n rows of n whitespace-separated rationals, blocks separated by
// blank lines. JSON format: {"n": n, "slices": [...]} where
// slices[k-1][i-1][j-1] is entry (i, j, k) as a string ("p/q", integer or
// decimal literal) or a JSON integer. Decimals are parsed exactly
// (0.6 -> 3/5); non-integer JSON numbers are rejected because they would
// round.

// Auto-detects the format (JSON input starts with '{'). Throws ParseError
// with a 1-based line/column position on malformed input.
Tensor3 parse_tensor(std::string_view text);

Tensor3 parse_tensor_json(std::string_view text);
Tensor3 parse_tensor_text(std::string_view text);

// Canonical serialization; every rational is rendered in lowest terms. The
// JSON form is a single line, suitable for JSON-lines streams. Parsing the
// result reproduces the tensor exactly.
std::string serialize_tensor(const Tensor3& t, TensorFormat format);

}  // namespace stochcube
