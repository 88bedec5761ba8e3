#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string env_or(const char* name, const char* fallback) {
  const char* value = std::getenv(name);
  return value ? value : fallback;
}

std::string binary() { return env_or("STOCHCUBE_BIN", "./tools/stochcube"); }
std::string fixtures() { return env_or("STOCHCUBE_FIXTURE_DIR", "fixtures"); }
std::string golden_dir() { return env_or("STOCHCUBE_GOLDEN_DIR", "tests/golden"); }

RunResult run(const std::string& args, bool keep_stderr = false) {
  const std::string command = binary() + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE_MESSAGE(pipe != nullptr, "failed to spawn: " << command);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string golden(const std::string& name) {
  const std::string path = golden_dir() + "/" + name;
  std::ifstream stream(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(stream), "missing golden file " << path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

void check_golden(const std::string& args, const std::string& golden_name, int expected_exit) {
  const RunResult result = run(args);
  CHECK_MESSAGE(result.exit_code == expected_exit, "command: " << args);
  CHECK_MESSAGE(result.output == golden(golden_name), "command: " << args);
}

}  // namespace

TEST_CASE("fixture outputs are pinned byte for byte") {
  const std::string e = fixtures() + "/E.json";
  const std::string f = fixtures() + "/F.json";
  check_golden("check " + e, "check_E.txt", 0);
  check_golden("check " + f, "check_F.txt", 0);
  check_golden("diagonal " + e, "diagonal_E.txt", 1);
  check_golden("diagonal " + f, "diagonal_F.txt", 0);
  check_golden("decompose " + e, "decompose_E.txt", 1);
  check_golden("decompose " + f, "decompose_F.txt", 1);
  check_golden("extreme " + e, "extreme_E.txt", 0);
  check_golden("diagonal --format json " + f, "diagonal_F.json", 0);
  check_golden("decompose --format json " + f, "decompose_F.json", 1);
  check_golden("diagonal --enumerate " + e, "diagonal_enum_E.txt", 1);
}

TEST_CASE("vec emits 3n^3 components") {
  const RunResult result = run("vec --format json " + fixtures() + "/E.json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["length"] == 81);
  CHECK(doc["values"].size() == 81);
}

TEST_CASE("vertices emits JSON lines plus a summary") {
  const RunResult result = run("vertices --n 2 --cross-check");
  CHECK(result.exit_code == 0);
  std::istringstream stream(result.output);
  std::string line;
  std::vector<nlohmann::json> docs;
  while (std::getline(stream, line)) docs.push_back(nlohmann::json::parse(line));
  REQUIRE(docs.size() == 3);
  CHECK(docs[0]["n"] == 2);
  CHECK(docs[2]["count"] == 2);
  CHECK(docs[2]["permutation_tensors"] == 2);
  CHECK(docs[2]["cross_check"] == "agree");
}

TEST_CASE("hrep export rides on the vertices subcommand") {
  const RunResult reduced = run("vertices --n 2 --emit-hrep");
  CHECK(reduced.exit_code == 0);
  CHECK(reduced.output.find("equalities 7") != std::string::npos);
  const RunResult full = run("vertices --n 2 --emit-hrep --full");
  CHECK(full.output.find("equalities 12") != std::string::npos);
}

TEST_CASE("bounds prints the table") {
  const RunResult result = run("bounds 1 2 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("21318") != std::string::npos);
  CHECK(result.output.find("64/27") != std::string::npos);

  const RunResult json = run("bounds 2 --format json --with-enumeration");
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc[0]["vertices"] == "2");
  CHECK(doc[0]["upper"] == "21318");
}

TEST_CASE("latin enumeration output") {
  const RunResult count = run("latin --n 4 --count-only");
  CHECK(count.exit_code == 0);
  CHECK(count.output == "576\n");
  const RunResult json = run("latin --n 3 --format json");
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["count"] == 12);
  CHECK(doc["squares"].size() == 12);
  CHECK(doc["squares"][0] == nlohmann::json::parse("[[1,2,3],[2,3,1],[3,1,2]]"));
}

TEST_CASE("gen is deterministic per seed") {
  const RunResult first = run("gen --n 3 --seed 11 --count 2 --format json");
  const RunResult second = run("gen --n 3 --seed 11 --count 2 --format json");
  const RunResult different = run("gen --n 3 --seed 12 --count 2 --format json");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output != different.output);
  // Samples parse back and pass the stochasticity check.
  std::istringstream stream(first.output);
  std::string line;
  REQUIRE(std::getline(stream, line));
  std::ofstream temp("gen_sample.json", std::ios::binary);
  temp << line;
  temp.close();
  CHECK(run("check gen_sample.json").exit_code == 0);
  std::remove("gen_sample.json");

  const RunResult delta = run("gen --n 3 --set delta --seed 5 --format json");
  CHECK(delta.exit_code == 0);
  CHECK(delta.output != first.output);
}

TEST_CASE("exit codes: usage, parse, guard") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("check").exit_code == 2);
  CHECK(run("check missing_file.json").exit_code == 2);
  CHECK(run("latin --n 6").exit_code == 3);
  CHECK(run("vertices --n 4").exit_code == 3);
  CHECK(run("vertices --n 5 --cap 9").exit_code == 3);
  CHECK(run("decompose --cap 2 " + fixtures() + "/E.json").exit_code == 3);
}

TEST_CASE("domain errors surface as usage errors") {
  // The uniform cube scaled by 2 is not stochastic; extreme requires one.
  std::ofstream temp("not_stochastic.txt", std::ios::binary);
  temp << "1\n\n2\n";
  temp.close();
  const RunResult result = run("extreme not_stochastic.txt", true);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("not stochastic") != std::string::npos);
  std::remove("not_stochastic.txt");
}

TEST_CASE("stdin input works") {
  const std::string command = "echo '{\"n\":1,\"slices\":[[[\"1\"]]]}' | " + binary() + " check -";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[256];
  std::string output;
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(output.find("stochastic: true") != std::string::npos);
}

TEST_CASE("a broken tensor file yields a parse error with location") {
  std::ofstream temp("broken_tensor.txt", std::ios::binary);
  temp << "2\n\n1 0\n0 x\n\n1 0\n0 1\n";
  temp.close();
  const RunResult result = run("check broken_tensor.txt", true);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("line 4") != std::string::npos);
  std::remove("broken_tensor.txt");
}
