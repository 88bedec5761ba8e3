// stochcube: exact tools for stochastic tensor cubes (line-stochastic
// order-3 tensors). Every computation is over arbitrary-precision rationals;
// exit codes encode mathematical outcomes so pipelines can branch on them:
//   0 property holds / feasible / witness found
//   1 property fails / infeasible / no witness
//   2 usage, parse or input-domain error
//   3 resource guard refused the request (see --cap)
//   4 internal error

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stochcube/bounds.hpp"
#include "stochcube/diagonal.hpp"
#include "stochcube/errors.hpp"
#include "stochcube/latin.hpp"
#include "stochcube/polytope.hpp"
#include "stochcube/stochastic.hpp"
#include "stochcube/tensor_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stochcube;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

Tensor3 load_tensor(const std::string& path) { return parse_tensor(read_input(path)); }

ordered_json square_to_json(const LatinSquare& square) {
  ordered_json rows = ordered_json::array();
  for (int j = 1; j <= square.order(); ++j) {
    ordered_json row = ordered_json::array();
    for (int k = 1; k <= square.order(); ++k) row.push_back(square.at(j, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_square(const LatinSquare& square) {
  for (int j = 1; j <= square.order(); ++j) {
    for (int k = 1; k <= square.order(); ++k) {
      if (k > 1) std::cout << ' ';
      std::cout << square.at(j, k);
    }
    std::cout << '\n';
  }
}

bool is_json(const std::string& format) { return format == "json"; }

int run_check(const std::string& input, const std::string& format) {
  const Tensor3 t = load_tensor(input);
  const bool direct = is_stochastic(t);
  const bool via_vec = check_vec_characterization(t);
  if (direct != via_vec) {
    throw IntegrityError("line-sum check and vectorized characterization disagree");
  }
  if (is_json(format)) {
    ordered_json out{{"stochastic", direct}, {"line_sum", direct}, {"vec_characterization", via_vec}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "stochastic: " << (direct ? "true" : "false") << '\n';
    std::cout << "line-sum: " << (direct ? "true" : "false") << '\n';
    std::cout << "vec-characterization: " << (via_vec ? "true" : "false") << '\n';
  }
  return direct ? 0 : 1;
}

int run_vec(const std::string& input, const std::string& format) {
  const Tensor3 t = load_tensor(input);
  const LineVec vec = vec_lines(t);
  if (is_json(format)) {
    ordered_json values = ordered_json::array();
    for (const Rational& value : vec.values) values.push_back(format_rational(value));
    ordered_json out{{"n", vec.n}, {"length", vec.values.size()}, {"values", std::move(values)}};
    std::cout << out.dump() << '\n';
  } else {
    for (std::size_t c = 0; c < vec.values.size(); ++c) {
      if (c > 0) std::cout << ' ';
      std::cout << format_rational(vec.values[c]);
    }
    std::cout << '\n';
  }
  return 0;
}

void print_witness_text(const Tensor3& t, const DiagonalWitness& witness) {
  std::cout << "positive diagonal: found\n";
  std::cout << "square:\n";
  print_square(witness.square);
  std::cout << "selected entries:\n";
  const int n = t.side();
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const int i = witness.square.at(j, k);
      std::cout << '(' << i << ',' << j << ',' << k << ") = " << format_rational(t.at(i, j, k))
                << '\n';
    }
  }
}

ordered_json witness_to_json(const Tensor3& t, const DiagonalWitness& witness) {
  ordered_json entries = ordered_json::array();
  const int n = t.side();
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const int i = witness.square.at(j, k);
      entries.push_back(ordered_json{
          {"i", i}, {"j", j}, {"k", k}, {"value", format_rational(t.at(i, j, k))}});
    }
  }
  return ordered_json{{"found", true},
                      {"square", square_to_json(witness.square)},
                      {"entries", std::move(entries)}};
}

int run_diagonal(const std::string& input, const std::string& format, bool enumerate, int cap,
                 int jobs) {
  const Tensor3 t = load_tensor(input);
  if (enumerate) {
    const std::vector<DiagonalWitness> witnesses = enumerate_positive_diagonals(t, cap, jobs);
    if (is_json(format)) {
      ordered_json squares = ordered_json::array();
      for (const DiagonalWitness& witness : witnesses) {
        squares.push_back(square_to_json(witness.square));
      }
      ordered_json out{{"count", witnesses.size()}, {"squares", std::move(squares)}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "positive diagonals: " << witnesses.size() << '\n';
      for (const DiagonalWitness& witness : witnesses) {
        std::cout << '\n';
        print_square(witness.square);
      }
    }
    return witnesses.empty() ? 1 : 0;
  }

  const std::optional<DiagonalWitness> witness = find_positive_diagonal(t);
  if (is_json(format)) {
    std::cout << (witness ? witness_to_json(t, *witness) : ordered_json{{"found", false}}).dump()
              << '\n';
  } else if (witness) {
    print_witness_text(t, *witness);
  } else {
    std::cout << "no positive diagonal\n";
  }
  return witness ? 0 : 1;
}

int run_decompose(const std::string& input, const std::string& format, int cap) {
  const Tensor3 t = load_tensor(input);
  const DecompositionCertificate certificate = membership_delta(t, cap);
  if (is_json(format)) {
    if (!certificate.feasible) {
      std::cout << ordered_json{{"feasible", false}}.dump() << '\n';
    } else {
      ordered_json terms = ordered_json::array();
      for (const auto& [square, weight] : certificate.terms) {
        terms.push_back(ordered_json{{"weight", format_rational(weight)},
                                     {"square", square_to_json(square)}});
      }
      std::cout << ordered_json{{"feasible", true}, {"terms", std::move(terms)}}.dump() << '\n';
    }
  } else if (!certificate.feasible) {
    std::cout << "infeasible\n";
  } else {
    std::cout << "feasible\n";
    std::cout << "terms: " << certificate.terms.size() << '\n';
    for (const auto& [square, weight] : certificate.terms) {
      std::cout << format_rational(weight) << " |";
      for (int j = 1; j <= square.order(); ++j) {
        std::cout << (j == 1 ? " " : " / ");
        for (int k = 1; k <= square.order(); ++k) {
          if (k > 1) std::cout << ' ';
          std::cout << square.at(j, k);
        }
      }
      std::cout << '\n';
    }
  }
  return certificate.feasible ? 0 : 1;
}

int run_extreme(const std::string& input, const std::string& format) {
  const Tensor3 t = load_tensor(input);
  const bool extreme = is_extreme(t);
  if (is_json(format)) {
    std::cout << ordered_json{{"extreme", extreme}}.dump() << '\n';
  } else {
    std::cout << "extreme: " << (extreme ? "true" : "false") << '\n';
  }
  return extreme ? 0 : 1;
}

int run_vertices(int n, int cap, bool cross_check, bool emit_hrep, bool full_system) {
  if (emit_hrep) {
    std::cout << to_hrep_text(constraint_system(n, !full_system));
    return 0;
  }
  VertexEnumOptions options;
  options.allow_large = cap >= n;
  const VertexSet vertices = enumerate_vertices(n, options);
  std::optional<std::string> cross_note;
  if (cross_check) {
    const VertexSet reference = enumerate_vertices_exhaustive(n);
    if (!(reference.vertices == vertices.vertices)) {
      throw IntegrityError("vertex enumeration methods disagree");
    }
    cross_note = "agree";
  }
  for (const Tensor3& vertex : vertices.vertices) {
    std::cout << serialize_tensor(vertex, TensorFormat::Json) << '\n';
  }
  ordered_json summary{{"n", vertices.n},
                       {"count", vertices.count()},
                       {"permutation_tensors", vertices.permutation_count()}};
  if (cross_note) summary["cross_check"] = *cross_note;
  std::cout << summary.dump() << '\n';
  return 0;
}

int run_bounds(const std::vector<int>& sides, const std::string& format, bool with_enumeration,
               int cap) {
  std::vector<BoundsReport> reports;
  for (int n : sides) {
    std::optional<Integer> count;
    if (with_enumeration) {
      VertexEnumOptions options;
      options.allow_large = cap >= n;
      count = Integer(enumerate_vertices(n, options).count());
    }
    reports.push_back(bounds_report(n, count));
  }
  if (is_json(format)) {
    ordered_json out = ordered_json::array();
    for (const BoundsReport& report : reports) {
      ordered_json row{{"n", report.n},
                       {"p", report.p.str()},
                       {"independent_lines", report.independent_lines.str()},
                       {"lower", format_rational(report.lower)},
                       {"lower_floor", rational_floor(report.lower).str()},
                       {"upper", format_rational(report.upper)},
                       {"upper_floor", rational_floor(report.upper).str()}};
      if (report.enumerated_count) row["vertices"] = report.enumerated_count->str();
      out.push_back(std::move(row));
    }
    std::cout << out.dump() << '\n';
    return 0;
  }

  std::vector<std::vector<std::string>> table;
  table.push_back(
      {"n", "p(n)", "lines", "lower", "lower_floor", "upper", "upper_floor", "vertices"});
  for (const BoundsReport& report : reports) {
    table.push_back({std::to_string(report.n), report.p.str(), report.independent_lines.str(),
                     format_rational(report.lower), rational_floor(report.lower).str(),
                     format_rational(report.upper), rational_floor(report.upper).str(),
                     report.enumerated_count ? report.enumerated_count->str() : "-"});
  }
  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) std::cout << "  ";
      std::cout << row[c] << std::string(widths[c] - row[c].size(), ' ');
    }
    std::cout << '\n';
  }
  return 0;
}

int run_latin(int n, const std::string& format, int cap, bool count_only) {
  const std::vector<LatinSquare> squares = enumerate_latin_squares(n, cap);
  if (is_json(format)) {
    ordered_json out{{"n", n}, {"count", squares.size()}};
    if (!count_only) {
      ordered_json list = ordered_json::array();
      for (const LatinSquare& square : squares) list.push_back(square_to_json(square));
      out["squares"] = std::move(list);
    }
    std::cout << out.dump() << '\n';
  } else if (count_only) {
    std::cout << squares.size() << '\n';
  } else {
    bool first = true;
    for (const LatinSquare& square : squares) {
      if (!first) std::cout << '\n';
      first = false;
      print_square(square);
    }
    std::cerr << "count: " << squares.size() << '\n';
  }
  return 0;
}

// The vertex-enumeration guard sits at side 3 by default; an explicit
// --cap >= n opts into the long-running side-4 computation.
constexpr int kDefaultVertexCap = 3;

int run_gen(int n, const std::string& set_name, std::uint64_t seed, int count,
            const std::string& format, int cap) {
  std::vector<Tensor3> generators;
  if (set_name == "omega") {
    VertexEnumOptions options;
    options.allow_large = cap >= n;
    generators = enumerate_vertices(n, options).vertices;
  } else {
    generators = permutation_tensors(n, cap > 0 ? cap : kDefaultLatinCap);
  }
  std::mt19937_64 rng(seed);
  for (int sample = 0; sample < count; ++sample) {
    const Tensor3 t = random_convex_combination(generators, rng);
    if (is_json(format)) {
      std::cout << serialize_tensor(t, TensorFormat::Json) << '\n';
    } else {
      if (sample > 0) std::cout << "---\n";
      std::cout << serialize_tensor(t, TensorFormat::Text);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for stochastic tensor cubes"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  int decompose_cap = kDefaultLatinCap;
  int latin_cap = kDefaultLatinCap;
  int vertices_cap = kDefaultVertexCap;
  int bounds_cap = kDefaultVertexCap;
  int gen_cap = 0;  // 0 = per-set default (omega: 3, delta: 5)
  int diagonal_cap = kDefaultDiagonalCap;
  int jobs = 1;
  int side = 3;
  bool enumerate_flag = false;
  bool cross_check = false;
  bool emit_hrep = false;
  bool full_system = false;
  bool with_enumeration = false;
  bool count_only = false;
  std::vector<int> bound_sides;
  std::string set_name = "omega";
  std::uint64_t seed = 0;
  int sample_count = 1;

  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "tensor file (JSON or text), or - for stdin")->required();
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "verify stochasticity (both test paths)");
  add_input(check);
  add_format(check);

  CLI::App* vec = app.add_subcommand("vec", "print the line vectorization (3n^3 components)");
  add_input(vec);
  add_format(vec);

  CLI::App* diagonal = app.add_subcommand("diagonal", "search for a positive diagonal");
  add_input(diagonal);
  add_format(diagonal);
  diagonal->add_flag("--enumerate", enumerate_flag, "list every positive diagonal");
  diagonal->add_option("--cap", diagonal_cap, "enumeration guard for --enumerate")
      ->check(CLI::PositiveNumber);
  diagonal->add_option("--jobs", jobs, "worker threads for --enumerate filtering")
      ->check(CLI::PositiveNumber);

  CLI::App* decompose =
      app.add_subcommand("decompose", "express the tensor over permutation tensors");
  add_input(decompose);
  add_format(decompose);
  decompose->add_option("--cap", decompose_cap, "Latin enumeration guard")
      ->check(CLI::PositiveNumber);

  CLI::App* extreme = app.add_subcommand("extreme", "test for a vertex of the polytope");
  add_input(extreme);
  add_format(extreme);

  CLI::App* vertices = app.add_subcommand("vertices", "enumerate all vertices (JSON lines)");
  vertices->add_option("--n", side, "side length")->required()->check(CLI::PositiveNumber);
  vertices->add_option("--cap", vertices_cap, "allow sides beyond the default guard of 3")
      ->check(CLI::PositiveNumber);
  vertices->add_flag("--cross-check", cross_check,
                     "also run the exhaustive method and compare the sets");
  vertices->add_flag("--emit-hrep", emit_hrep, "print the H-representation instead");
  vertices->add_flag("--full", full_system, "with --emit-hrep: use all 3n^2 equality rows");

  CLI::App* bounds = app.add_subcommand("bounds", "vertex-count bounds table");
  bounds->add_option("sides", bound_sides, "side lengths")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(bounds);
  bounds->add_flag("--with-enumeration", with_enumeration,
                   "also enumerate the vertex count (guarded)");
  bounds->add_option("--cap", bounds_cap, "vertex enumeration guard for --with-enumeration")
      ->check(CLI::PositiveNumber);

  CLI::App* latin = app.add_subcommand("latin", "enumerate Latin squares");
  latin->add_option("--n", side, "order")->required()->check(CLI::PositiveNumber);
  add_format(latin);
  latin->add_option("--cap", latin_cap, "enumeration guard")->check(CLI::PositiveNumber);
  latin->add_flag("--count-only", count_only, "print only the number of squares");

  CLI::App* gen = app.add_subcommand("gen", "sample random members of the polytopes");
  gen->add_option("--n", side, "side length")->required()->check(CLI::PositiveNumber);
  gen->add_option("--set", set_name,
                  "generator set: omega (all vertices) or delta (permutation tensors)")
      ->check(CLI::IsMember({"omega", "delta"}));
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--count", sample_count, "number of samples")->check(CLI::PositiveNumber);
  add_format(gen);
  gen->add_option("--cap", gen_cap, "enumeration guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(input, format);
    if (vec->parsed()) return run_vec(input, format);
    if (diagonal->parsed()) return run_diagonal(input, format, enumerate_flag, diagonal_cap, jobs);
    if (decompose->parsed()) return run_decompose(input, format, decompose_cap);
    if (extreme->parsed()) return run_extreme(input, format);
    if (vertices->parsed())
      return run_vertices(side, vertices_cap, cross_check, emit_hrep, full_system);
    if (bounds->parsed()) return run_bounds(bound_sides, format, with_enumeration, bounds_cap);
    if (latin->parsed()) return run_latin(side, format, latin_cap, count_only);
    if (gen->parsed()) return run_gen(side, set_name, seed, sample_count, format,
                                      gen_cap > 0 ? gen_cap : (set_name == "omega" ? kDefaultVertexCap : 0));
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}
