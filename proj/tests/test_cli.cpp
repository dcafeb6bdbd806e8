// Copyright 2026 The bdncg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bdncg/cli.hpp"
#include "bdncg/io.hpp"

using namespace bdncg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "bdncg_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

std::string gen(const std::string& name, std::vector<std::string> args) {
  args.insert(args.begin(), "gen");
  args.push_back("-o");
  args.push_back(file(name));
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return file(name);
}

}  // namespace

TEST_CASE("golden exit codes for check") {
  struct Golden {
    std::string name;
    std::vector<std::string> gen_args;
    int exit_code;
  };
  const std::vector<Golden> suite = {
      {"prime3", {"prime-tree", "--p", "3"}, 0},
      {"star_leaves", {"star", "--n", "5", "--owner", "leaves", "--variant", "max", "--R", "2"}, 0},
      {"star_center_tight", {"star", "--n", "5", "--owner", "center", "--variant", "sum", "--B", "4"}, 1},
      {"star_sum", {"star", "--n", "7", "--variant", "sum"}, 0},
      {"path_hub", {"path-hub", "--R", "2", "--h", "1"}, 0},
      {"multipartite", {"multipartite", "--n", "8", "--k", "3"}, 0},
      {"ring_window", {"ring", "--k", "3", "--h", "2", "--B", "15"}, 0},
      {"ring_edge", {"ring", "--k", "3", "--h", "2", "--B", "19"}, 1},
      {"complete", {"complete", "--n", "4"}, 0},
      {"clique_pendant", {"clique-pendant", "--k", "3", "--variant", "max"}, 0},
      {"petersen", {"gadget", "--builtin", "petersen", "--pendants", "20", "--R", "2"}, 0},
      {"domset", {"reduce-domset", "--builtin", "cycle:4", "--R", "2"}, 1},
  };
  for (const auto& g : suite) {
    CAPTURE(g.name);
    const std::string path = gen(g.name + ".json", g.gen_args);
    const Run r = run({"check", path});
    CHECK(r.code == g.exit_code);
    CHECK(run({"--jobs", "2", "check", "--json", path}).code == g.exit_code);
  }

  std::ofstream(file("edgeless.json"))
      << R"({"variant":"max","n":4,"bounds":2,"buys":[[],[],[],[]]})";
  CHECK(run({"check", file("edgeless.json")}).code == 1);

  std::ofstream(file("broken.json")) << "{ not json";
  CHECK(run({"check", file("broken.json")}).code == 2);
  CHECK(run({"check", file("missing.json")}).code == 2);

  const std::string hub = gen("hub.json", {"path-hub", "--R", "3", "--h", "10"});
  CHECK(run({"--budget", "1", "check", hub}).code == 3);
}

TEST_CASE("generator parameter errors") {
  CHECK(run({"gen", "prime-tree", "--p", "4"}).code == 2);
  CHECK(run({"gen", "prime-tree"}).code == 2);
  CHECK(run({"gen", "nonsense"}).code == 2);
  CHECK(run({"gen", "star", "--n", "1"}).code == 2);
  CHECK(run({"gen", "gadget", "--builtin", "petersen", "--pendants", "3", "--R", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("average-distance bounds are converted and echoed") {
  const Run r = run({"gen", "ring", "--k", "3", "--h", "2", "--D", "1.7", "-o", file("ringd.json")});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("using B=15") != std::string::npos);
  CHECK(load_instance(file("ringd.json")).spec.bound(0) == 15);
}

TEST_CASE("best response command") {
  const std::string path = gen("dom.json", {"reduce-domset", "--builtin", "cycle:4", "--R", "2"});
  const Run r = run({"best-response", path, "--player", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cost: 2") != std::string::npos);
  CHECK(run({"best-response", path, "--player", "9"}).code == 2);
  const std::string hub = gen("hub2.json", {"path-hub", "--R", "3", "--h", "10"});
  CHECK(run({"--budget", "1", "best-response", hub, "--player", "7"}).code == 3);
}

TEST_CASE("dynamics command with trace") {
  std::ofstream(file("empty4.json"))
      << R"({"variant":"max","n":4,"bounds":1,"buys":[[],[],[],[]]})";
  const Run r = run({"dynamics", file("empty4.json"), "--trace", file("trace.jsonl"),
                     "-o", file("final.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome: EQUILIBRIUM") != std::string::npos);
  std::ifstream trace(file("trace.jsonl"));
  std::string line;
  int lines = 0;
  while (std::getline(trace, line)) {
    const Json event = Json::parse(line);
    CHECK(event.contains("old_strategy"));
    ++lines;
  }
  CHECK(lines > 0);
  CHECK(run({"check", file("final.json")}).code == 0);
  CHECK(run({"dynamics", file("empty4.json"), "--schedule", "diagonal"}).code == 2);
  const std::string loop = gen("limit.json", {"star", "--n", "6", "--variant", "sum", "--B", "5"});
  const Run limited = run({"dynamics", loop, "--max-rounds", "1"});
  CHECK((limited.code == 0 || limited.code == 1));
}

TEST_CASE("analyze and export commands") {
  const std::string path = gen("prime.json", {"prime-tree", "--p", "3"});
  const Run csv = run({"analyze", path, "--csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("\"prime-tree(p=3)\",ratio,") != std::string::npos);
  const Run json = run({"analyze", path, "--json"});
  CHECK(json.code == 0);
  CHECK(Json::parse(json.out).at("verdict") == "STABLE");
  const Run dot = run({"export", path, "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  const Run edges = run({"export", path, "--format", "edgelist"});
  CHECK(edges.out.rfind("# 23 61\n", 0) == 0);
  CHECK(run({"export", path, "--format", "svg"}).code == 2);
}

TEST_CASE("generated files round-trip byte for byte") {
  const std::string path = gen("rt.json", {"clique-pendant", "--k", "4", "--variant", "sum"});
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(dump_instance(load_instance(path)) == buffer.str());
}
