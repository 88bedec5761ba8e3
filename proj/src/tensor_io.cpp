#include "stochcube/tensor_io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <vector>

#include "stochcube/errors.hpp"

namespace stochcube {

namespace {

// Sanity limit on the declared side length; n^3 entries are allocated.
constexpr int kMaxSide = 256;

void require_side(long long n, int at_line = 0) {
  if (n < 1 || n > kMaxSide) {
    throw ParseError("side length " + std::to_string(n) + " out of supported range 1.." +
                     std::to_string(kMaxSide), at_line);
  }
}

std::pair<int, int> line_column_of_offset(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t pos = 0; pos < offset && pos < text.size(); ++pos) {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational entry_from_json(const nlohmann::json& value, int k, int i, int j) {
  const std::string where = "slices[" + std::to_string(k - 1) + "][" + std::to_string(i - 1) +
                            "][" + std::to_string(j - 1) + "]";
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " at " + where);
    }
  }
  if (value.is_number_integer()) {
    return Rational(Integer(value.get<long long>()));
  }
  if (value.is_number()) {
    throw ParseError("non-integer JSON number at " + where +
                     "; quote the value (e.g. \"0.6\") to keep it exact");
  }
  throw ParseError("expected a rational string or integer at " + where);
}

struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  struct Token {
    std::string value;
    int line = 0;
    int column = 0;
  };

  // Returns the next whitespace-delimited token, or an empty token at EOF.
  Token next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      advance();
    }
    Token token;
    token.line = line;
    token.column = column;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      token.value.push_back(text[pos]);
      advance();
    }
    return token;
  }

 private:
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }
};

}  // namespace

Tensor3 parse_tensor_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object with \"n\" and \"slices\"");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("missing or non-integer \"n\"");
  }
  const long long declared = doc["n"].get<long long>();
  require_side(declared);
  const int n = static_cast<int>(declared);

  if (!doc.contains("slices") || !doc["slices"].is_array() ||
      doc["slices"].size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"slices\" must be an array of " + std::to_string(n) + " slices");
  }
  Tensor3 t = Tensor3::zeros(n);
  for (int k = 1; k <= n; ++k) {
    const auto& slice_rows = doc["slices"][k - 1];
    if (!slice_rows.is_array() || slice_rows.size() != static_cast<std::size_t>(n)) {
      throw ParseError("slice " + std::to_string(k) + " must have " + std::to_string(n) + " rows");
    }
    for (int i = 1; i <= n; ++i) {
      const auto& row = slice_rows[i - 1];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        throw ParseError("slice " + std::to_string(k) + " row " + std::to_string(i) +
                         " must have " + std::to_string(n) + " entries");
      }
      for (int j = 1; j <= n; ++j) t.at(i, j, k) = entry_from_json(row[j - 1], k, i, j);
    }
  }
  return t;
}

Tensor3 parse_tensor_text(std::string_view text) {
  TextCursor cursor{text};

  const auto header = cursor.next();
  if (header.value.empty()) throw ParseError("empty input: expected a side length header");
  long long declared = 0;
  try {
    std::size_t used = 0;
    declared = std::stoll(header.value, &used);
    if (used != header.value.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ParseError("invalid side length '" + header.value + "'", header.line, header.column);
  }
  require_side(declared, header.line);
  const int n = static_cast<int>(declared);

  Tensor3 t = Tensor3::zeros(n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const auto token = cursor.next();
        if (token.value.empty()) {
          throw ParseError("unexpected end of input: slice " + std::to_string(k) + " row " +
                               std::to_string(i) + " is incomplete",
                           cursor.line, cursor.column);
        }
        try {
          t.at(i, j, k) = parse_rational(token.value);
        } catch (const ParseError&) {
          throw ParseError("invalid rational '" + token.value + "'", token.line, token.column);
        }
      }
    }
  }
  const auto trailing = cursor.next();
  if (!trailing.value.empty()) {
    throw ParseError("unexpected trailing token '" + trailing.value + "'", trailing.line,
                     trailing.column);
  }
  return t;
}

Tensor3 parse_tensor(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{' || c == '[') return parse_tensor_json(text);
    break;
  }
  return parse_tensor_text(text);
}

std::string serialize_tensor(const Tensor3& t, TensorFormat format) {
  const int n = t.side();
  if (format == TensorFormat::Json) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    auto& slices = doc["slices"];
    slices = nlohmann::ordered_json::array();
    for (int k = 1; k <= n; ++k) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int i = 1; i <= n; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 1; j <= n; ++j) row.push_back(format_rational(t.at(i, j, k)));
        rows.push_back(std::move(row));
      }
      slices.push_back(std::move(rows));
    }
    return doc.dump();
  }

  std::ostringstream out;
  out << n << "\n";
  for (int k = 1; k <= n; ++k) {
    out << "\n";
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (j > 1) out << ' ';
        out << format_rational(t.at(i, j, k));
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace stochcube
