#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using relcm::cli::runCommand;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = runCommand(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(RELCM_FIXTURE_DIR) + "/" + name; }

// Independent flattening of a JSON document into "path: value" lines.
void leaves(const nlohmann::ordered_json& node, const std::string& path, std::vector<std::string>& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (path.empty() && it.key() == "summary") continue;
      leaves(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (node.is_array()) {
    if (node.empty()) out.push_back(path + ": []");
    for (std::size_t i = 0; i < node.size(); ++i) leaves(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out.push_back(path + ": " + node.get<std::string>());
  } else {
    out.push_back(path + ": " + node.dump());
  }
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("documented command examples") {
  auto rcm = run({"rcm", fixture("ex35.mod")});
  CHECK(rcm.code == 0);
  CHECK(lines(rcm.out).front() == "RCM w.r.t. Q: yes, rdim 2; w.r.t. P: no");

  auto thm = run({"thm22", "--q", "1", "--j", "-2", fixture("hypersurface.mod")});
  CHECK(thm.code == 1);
  CHECK(thm.err.rfind("NotRelativeCM", 0) == 0);

  auto oracle = run({"oracle-check", fixture("ex36_3.mod")});
  CHECK(oracle.code == 0);
  CHECK(lines(oracle.out).front().rfind("0 mismatches", 0) == 0);
}

TEST_CASE("exit codes follow the contract") {
  const std::string ex35 = fixture("ex35.mod");
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"analyze", ex35}, 0},
      {{"rcm", fixture("ex35.json")}, 0},
      {{"--format", "json", "rcm", ex35}, 0},
      {{"rcm", ex35, "--format", "json", "--seed", "4"}, 0},
      {{"lc", ex35, "--j-min", "-4", "--j-max", "-2"}, 0},
      {{"lc", ex35, "--i", "0", "--j-min", "-2", "--j-max", "0"}, 0},
      {{"resolve", ex35}, 0},
      {{"thm22", "--q", "2", "--j", "-3", ex35}, 0},
      {{"oracle-check", ex35, "--k-window", "0:2", "--j-window", "-4:0"}, 0},
      {{"corpus", "list"}, 0},
      {{"corpus", "gen", "ex36_2"}, 0},
      {{"corpus", "gen", "random", "--seed", "3"}, 0},
      {{"--help"}, 0},
      {{"thm22", "--q", "1", "--j", "-2", fixture("hypersurface.mod")}, 1},
      {{"thm22", "--q", "1", "--j", "-2", ex35}, 1},
      {{"lc", fixture("hypersurface.mod")}, 1},
      {{"analyze", fixture("zero.mod")}, 1},
      {{"rcm", fixture("missing.mod")}, 2},
      {{"rcm", fixture("bad_syntax.mod")}, 2},
      {{"rcm", fixture("bad_degree.mod")}, 2},
      {{"oracle-check", ex35, "--k-window", "3:1"}, 2},
      {{"oracle-check", ex35, "--j-window", "x"}, 2},
      {{"lc", ex35, "--j-min", "2", "--j-max", "1"}, 2},
      {{"thm22", "--j", "-2", ex35}, 2},
      {{"--format", "yaml", "rcm", ex35}, 2},
      {{"--field", "4", "rcm", ex35}, 2},
      {{"corpus", "gen", "no_such_entry"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    auto o = run(c.args);
    CAPTURE(o.err);
    CHECK(o.code == c.code);
    if (c.code == 0) CHECK(o.err.empty());
    if (c.code != 0 && c.args != std::vector<std::string>{"--help"}) CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("diagnostics name the error and its location") {
  auto syntax = run({"rcm", fixture("bad_syntax.mod")});
  CHECK(syntax.err.find("ParseError") != std::string::npos);
  CHECK(syntax.err.find("line 3") != std::string::npos);
  auto degree = run({"rcm", fixture("bad_degree.mod")});
  CHECK(degree.err.find("DegreeInconsistent") != std::string::npos);
}

TEST_CASE("text and JSON reports carry the same content") {
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", fixture("ex35.mod")},
      {"analyze", fixture("ex36_2.mod")},
      {"rcm", fixture("tensor_y_not_cm.mod")},
      {"lc", fixture("ex35.mod")},
      {"lc", "--i", "1", fixture("hypersurface.mod"), "--j-min", "-3", "--j-max", "1"},
      {"resolve", fixture("free_2_2.mod")},
      {"thm22", "--q", "0", "--j", "0", fixture("ex36_1.mod")},
      {"oracle-check", fixture("hypersurface.mod")},
      {"corpus", "list"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd.front());
    auto text = run(cmd);
    auto withJson = cmd;
    withJson.insert(withJson.begin(), {"--format", "json"});
    auto json = run(withJson);
    REQUIRE(text.code == 0);
    REQUIRE(json.code == 0);
    auto doc = nlohmann::ordered_json::parse(json.out);
    std::vector<std::string> expected;
    leaves(doc, "", expected);
    auto got = lines(text.out);
    REQUIRE(!got.empty());
    CHECK(got.front() == doc["summary"].get<std::string>());
    got.erase(got.begin());
    CHECK(got == expected);
  }
}

TEST_CASE("field override and generated entries") {
  auto o = run({"--format", "json", "--field", "101", "analyze", fixture("ex35.mod")});
  REQUIRE(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["module"]["p"] == 101);

  auto gen = run({"corpus", "gen", "random", "--seed", "5"});
  auto named = run({"corpus", "gen", "random_5"});
  CHECK(gen.out == named.out);
  CHECK(run({"corpus", "gen", "--format", "json", "ex35"}).out.find("\"ring\"") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const char* f : {"ex35.mod", "ex36_3.mod", "hypersurface.mod"}) {
    auto a = run({"--format", "json", "--seed", "11", "analyze", fixture(f)});
    auto b = run({"--format", "json", "--seed", "11", "analyze", fixture(f)});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
