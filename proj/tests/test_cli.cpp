#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcore/affine.hpp"
#include "kcore/cli.hpp"
#include "kcore/io.hpp"
#include "kcore/ktableau.hpp"
#include "kcore/partition.hpp"

using namespace kcore;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args,
              const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  return out;
}

KTableau example_tableau() {
  KTableau t;
  t.k = 3;
  t.shape = Partition({8, 5, 2, 1});
  t.rows = {{1, 2, 2, 2, 3, 4, 4, 6}, {2, 3, 4, 4, 6}, {4, 6}, {5}};
  t.evaluation = {1, 3, 1, 2, 1, 1};
  return t;
}

}  // namespace

TEST_CASE("bijection subcommands") {
  auto r = run({"partition-to-core", "-k", "4", "4,2,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "6,2,1,1\n");
  CHECK(r.err.empty());

  r = run({"core-to-partition", "-k", "4", "6,2,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "4,2,1,1\n");

  r = run({"partition-to-core", "-k", "4", "4,3,2,2,1,1"});
  CHECK(r.out == "9,5,3,2,1,1\n");

  r = run({"kskew", "-k", "4", "4,3,2,2,1,1"});
  CHECK(r.out == "9,5,3,2,1,1 / 5,2,1\n");

  r = run({"kconjugate", "-k", "4", "4,3,2,2,1,1"});
  CHECK(r.out == "3,2,2,1,1,1,1,1,1\n");

  r = run({"kconjugate", "-k", "4", "-"});
  CHECK(r.code == 0);
  CHECK(r.out == "-\n");
}

TEST_CASE("json output round trips") {
  auto r = run({"partition-to-core", "-k", "4", "4,2,1,1", "--format",
                "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("k") == 4);
  CHECK(j.at("shape").get<Partition>() == Partition({6, 2, 1, 1}));

  r = run({"kconjugate", "-k", "4", "4,3,2,2,1,1", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).get<Partition>() ==
        Partition({3, 2, 2, 1, 1, 1, 1, 1, 1}));

  r = run({"kskew", "-k", "4", "4,3,2,2,1,1", "--format", "json"});
  const auto s = nlohmann::json::parse(r.out);
  CHECK(s.at("outer").get<Partition>() == Partition({9, 5, 3, 2, 1, 1}));
  CHECK(s.at("inner").get<Partition>() == Partition({5, 2, 1}));
}

TEST_CASE("covers stream with a trailing count") {
  auto r = run({"covers", "-k", "4", "--direction", "up", "4,2,1,1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"4,2,2,1", "4,2,1,1,1"});
  CHECK(r.err == "count: 2\n");

  r = run({"covers", "-k", "4", "--direction", "down", "4,2,1,1"});
  CHECK(lines(r.out) == std::vector<std::string>{"4,1,1,1", "4,2,1"});
  CHECK(r.err == "count: 2\n");

  r = run({"covers", "-k", "4", "4,2,1,1"});
  CHECK(r.code == 2);
}

TEST_CASE("leq prints a boolean") {
  auto r = run({"leq", "-k", "3", "2,2", "3,2,1,1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
  r = run({"leq", "-k", "3", "2,1", "2,2"});
  CHECK(r.out == "true\n");
  r = run({"leq", "-k", "3", "2,1", "2,2", "--format", "json"});
  CHECK(r.out == "true\n");
}

TEST_CASE("chain enumeration") {
  auto r = run({"chains", "-k", "3", "3,2,1,1"});
  CHECK(r.code == 0);
  const auto out_lines = lines(r.out);
  REQUIRE(out_lines.size() == 4);
  CHECK(r.err == "count: 4\n");
  bool found = false;
  for (const auto& line : out_lines) {
    if (line == "- < 1 < 2 < 3 < 3,1 < 3,1,1 < 3,2,1 < 3,2,1,1") found = true;
  }
  CHECK(found);

  r = run({"chains", "-k", "3", "3,3,2,1", "--evaluation", "1,3,1,2,1,1"});
  CHECK(lines(r.out).size() == 3);
  CHECK(r.err == "count: 3\n");

  r = run({"chains", "-k", "3", "3,3,2,1", "--evaluation", "1,3,1,2,1,1",
           "--format", "json"});
  CHECK(r.code == 0);
  for (const auto& line : lines(r.out)) {
    Chain c = nlohmann::json::parse(line).get<Chain>();
    CHECK(c.k == 3);
    CHECK(c.steps.back() == Partition({3, 3, 2, 1}));
  }
}

TEST_CASE("tableau enumeration") {
  auto r = run({"tableaux", "-k", "3", "--standard", "3,2,1,1"});
  CHECK(r.code == 0);
  CHECK(r.err == "count: 4\n");
  const std::string first_block = "7\n6\n4 5 7\n1 2 3 4 5 7";
  CHECK(r.out.substr(0, first_block.size()) == first_block);

  r = run({"tableaux", "-k", "3", "--evaluation", "1,3,1,2,1,1", "3,3,2,1",
           "--format", "json"});
  CHECK(r.err == "count: 3\n");
  const auto out_lines = lines(r.out);
  REQUIRE(out_lines.size() == 3);
  bool found = false;
  for (const auto& line : out_lines) {
    KTableau t = nlohmann::json::parse(line).get<KTableau>();
    CHECK(is_valid_tableau(t));
    if (t == example_tableau()) found = true;
  }
  CHECK(found);

  r = run({"tableaux", "-k", "3", "3,2,1,1"});
  CHECK(r.code == 2);
  r = run({"tableaux", "-k", "3", "--standard", "--evaluation", "1,1",
           "3,2,1,1"});
  CHECK(r.code == 2);
}

TEST_CASE("standardize reads a tableau from stdin") {
  const std::string input = nlohmann::json(example_tableau()).dump();
  auto r = run({"standardize"}, input);
  CHECK(r.code == 0);
  CHECK(r.out == "8\n7 9\n4 5 6 7 9\n1 2 3 4 5 6 7 9\n");
  CHECK(r.err == "steps: 9\n");

  r = run({"standardize", "--format", "json"}, input);
  const KTableau t = nlohmann::json::parse(r.out).get<KTableau>();
  CHECK(is_standard(t));
  CHECK(t.shape == Partition({8, 5, 2, 1}));

  r = run({"standardize"}, "not json");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("words and tableaux convert both ways") {
  KTableau second;
  second.k = 3;
  second.shape = Partition({6, 3, 1, 1});
  second.rows = {{1, 2, 3, 4, 5, 7}, {4, 5, 7}, {6}, {7}};
  second.evaluation = {1, 1, 1, 1, 1, 1, 1};
  auto r = run({"word"}, nlohmann::json(second).dump());
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 0 3 2 1 0\n");

  r = run({"tableau", "-k", "3", "1", "2", "0", "3", "2", "1", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n6\n4 5 7\n1 2 3 4 5 7\n");

  r = run({"tableau", "-k", "3", "9"});
  CHECK(r.code == 2);
}

TEST_CASE("phi prints the canonical word or the window") {
  auto r = run({"phi", "-k", "3", "3,2,2,1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 2 0 3 2 1 0\n");

  r = run({"phi", "-k", "3", "3,2,2,1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(affine_from_json(j) == phi(Partition({3, 2, 2, 1}), 3));
}

TEST_CASE("matrix subcommands") {
  auto r = run({"kostka", "--n", "4", "--k", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        ",\"2,2\",\"2,1,1\",\"1,1,1,1\"\n"
        "\"2,2\",1,1,1\n"
        "\"2,1,1\",0,1,2\n"
        "\"1,1,1,1\",0,0,1\n");

  r = run({"kschur-h", "--n", "4", "--k", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("entries") ==
        nlohmann::json({{1, -1, 1}, {0, 1, -2}, {0, 0, 1}}));

  r = run({"kostka", "--n", "3", "--k", "2"});
  CHECK(r.out.find("2,1") != std::string::npos);
  CHECK(r.code == 0);

  r = run({"kostka", "--n", "3", "--k", "2", "--format", "dot"});
  CHECK(r.code == 2);
}

TEST_CASE("hasse emits dot or edge lines") {
  auto r = run({"hasse", "--n", "2", "--k", "1", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("rankdir=BT") != std::string::npos);

  r = run({"hasse", "--n", "2", "--k", "1"});
  CHECK(lines(r.out) == std::vector<std::string>{"- -> 1", "1 -> 1,1"});
  CHECK(r.err == "count: 2\n");
}

TEST_CASE("check subcommand runs the suites") {
  const auto r = run({"check", "--n", "3", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all suites passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes distinguish misuse from bad input") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"help"}).code == 0);
  CHECK_FALSE(run({"help"}).out.empty());

  CHECK(run({"leq", "-k", "3", "2,2"}).code == 2);
  CHECK(run({"leq", "-k", "3", "2,2", "2,x"}).code == 2);
  CHECK(run({"leq", "-k", "0", "2,2", "2,1"}).code == 2);
  CHECK(run({"partition-to-core", "-k", "3", "4,2"}).code == 2);
  CHECK(run({"core-to-partition", "-k", "2", "2,2"}).code == 2);
  CHECK(run({"kconjugate", "-k", "3", "2,1", "--format", "dot"}).code == 2);
  CHECK(run({"chains", "-k", "3", "2,1", "--evaluation", "1,1"}).code == 2);

  const auto missing_k = run({"partition-to-core", "2,1"});
  CHECK(missing_k.code == 2);
  CHECK_FALSE(missing_k.err.empty());
}

TEST_CASE("enumeration limit comes from the environment") {
  setenv("KCORE_MAX_ENUM", "2", 1);
  auto r = run({"chains", "-k", "3", "3,2,1,1"});
  CHECK(r.code == 2);
  setenv("KCORE_MAX_ENUM", "junk", 1);
  r = run({"chains", "-k", "3", "3,2,1,1"});
  CHECK(r.code == 2);
  unsetenv("KCORE_MAX_ENUM");
  r = run({"chains", "-k", "3", "3,2,1,1"});
  CHECK(r.code == 0);
}
