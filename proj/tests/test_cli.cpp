// Copyright 2026 The ksym Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "ksym/catalog.hpp"
#include "ksym/families.hpp"
#include "ksym/io.hpp"
#include "ksym/verify.hpp"

namespace ksym {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome Run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::Run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& text) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) lines.push_back(line);
  return lines;
}

TEST_CASE("gen cnm") {
  const Outcome r = Run({"gen", "--family", "cnm", "--n", "2", "--m", "2"});
  CHECK(r.status == cli::kExitOk);
  CHECK(ParseGraph(r.out) == BuildCnm(2, 2));
  CHECK(ParseGraph(r.out).order() == 6);
}

TEST_CASE("gen other families") {
  CHECK(ParseGraph(Run({"gen", "--family", "cnkm", "--n", "4", "--k", "2", "--m", "3"}).out) ==
        BuildCnkm(4, 2, 3));
  CHECK(ParseGraph(Run({"gen", "--family", "named", "--name", "petersen"}).out) == Petersen());
  CHECK(ParseGraph(Run({"gen", "--family", "named", "--name", "cycle", "--n", "5"}).out) ==
        Cycle(5));
  const Graph orbit = ParseGraph(Run({"gen", "--family", "orbit", "--k", "2", "--l", "3"}).out);
  CHECK(orbit == BuildOrbitConstruction(2, StandardOrbitParts(2, 3)).graph);
  CHECK(Run({"gen", "--family", "cnkm", "--n", "4", "--k", "3", "--m", "1"}).status ==
        cli::kExitUsage);
  CHECK(Run({"gen", "--family", "nope"}).status == cli::kExitUsage);
  CHECK(Run({"gen", "--family", "named", "--name", "nope"}).status == cli::kExitUsage);
}

TEST_CASE("charpoly factored") {
  const std::string c22 = EmitGraph(BuildCnm(2, 2));
  const Outcome r = Run({"charpoly", "--factored"}, c22);
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "x(x-1)^2(x-3)^2(x-4)\n");
  CHECK(Run({"charpoly"}, c22).out == ToString(LaplacianCharpoly(BuildCnm(2, 2))) + "\n");
  CHECK(Json::parse(Run({"charpoly", "--json"}, c22).out) ==
        ToJson(LaplacianCharpoly(BuildCnm(2, 2))));
}

TEST_CASE("spectrum and integral") {
  const std::string petersen = EmitGraph(Petersen());
  const Outcome s = Run({"spectrum"}, petersen);
  CHECK(s.out == "order 10\nintegral yes\neigenvalues 0, 2^5, 5^4\n");
  CHECK(Json::parse(Run({"spectrum", "--json"}, petersen).out) ==
        ToJson(ComputeSpectrum(Petersen())));
  CHECK(Run({"integral"}, petersen).out == "yes\n0, 2^5, 5^4\n");
  const Outcome p = Run({"integral"}, EmitGraph(Path(4)));
  CHECK(p.status == cli::kExitOk);
  CHECK(Lines(p.out).front() == "no");
}

TEST_CASE("search") {
  const Outcome r = Run({"search", "--max-n", "4", "--max-m", "4"});
  CHECK(r.out == "1 1\n1 2\n1 3\n1 4\n2 2\n3 4\n4 3\n");
  CHECK(Run({"search", "--max-n", "4", "--max-m", "4", "--brute-force"}).out == r.out);
  CHECK(Json::parse(Run({"search", "--max-n", "4", "--max-m", "4", "--json"}).out) ==
        SearchPairsJson(4, 4, SearchIntegralCnm(4, 4)));
}

TEST_CASE("join") {
  const std::string c4 = TempFile("ksym_cli_c4.txt", EmitGraph(Cycle(4)));
  const std::string k2 = TempFile("ksym_cli_k2.txt", EmitGraph(Complete(2)));
  const Outcome r = Run({"join", "--g1", c4, "--g2", k2, "--k", "2", "--a1", "(0 2)(1 3)",
                         "--a2", "(0 1)"});
  CHECK(r.status == cli::kExitOk);
  const auto lines = Lines(r.out);
  REQUIRE_FALSE(lines.empty());
  CHECK(lines.front().rfind("# action ", 0) == 0);
  const CyclicAction a1 = VerifyKSymmetric(Cycle(4), ParseCycles("(0 2)(1 3)", 4), 2);
  const CyclicAction a2 = VerifyKSymmetric(Complete(2), ParseCycles("(0 1)", 2), 2);
  const JoinResult expected = KJoin(Cycle(4), a1, BaseOf(a1), Complete(2), a2, BaseOf(a2));
  CHECK(ParseGraph(r.out) == expected.graph);
  CHECK(lines.front() == "# action " + CycleString(expected.action.sigma()));
  // (0 1 2 3) is not an automorphism of k=2 order.
  CHECK(Run({"join", "--g1", c4, "--g2", k2, "--k", "2", "--a1", "(0 1 2 3)", "--a2", "(0 1)"})
            .status == cli::kExitUsage);
  CHECK(Run({"join", "--g1", "/nonexistent/x", "--g2", k2, "--k", "2", "--a1", "(0 2)(1 3)",
             "--a2", "(0 1)"})
            .status == cli::kExitUsage);
}

TEST_CASE("find-sym") {
  const std::string petersen = EmitGraph(Petersen());
  const Outcome found = Run({"find-sym", "--k", "5"}, petersen);
  CHECK(found.status == cli::kExitOk);
  CHECK(Lines(found.out).front() == "found (0 1 2 3 4)(5 6 7 8 9)");
  const Outcome none = Run({"find-sym", "--k", "10"}, petersen);
  CHECK(Lines(none.out).front() == "not_found");
  const Outcome tiny = Run({"find-sym", "--k", "10", "--budget", "1"}, petersen);
  CHECK(Lines(tiny.out).front() == "budget_exhausted");
  const Json j = Json::parse(Run({"find-sym", "--k", "5", "--json"}, petersen).out);
  CHECK(j["status"] == "found");
  CHECK(j["action"]["k"] == 5);
}

TEST_CASE("metrics") {
  const Outcome r = Run({"metrics"}, EmitGraph(Cycle(4)));
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.find("kappa 2\n") != std::string::npos);
  CHECK(r.out.find("two_connected yes\n") != std::string::npos);
  const Json j = Json::parse(Run({"metrics", "--json"}, EmitGraph(Path(3))).out);
  CHECK(j["kappa"] == 1);
  CHECK(j["pendants"] == 2);
}

TEST_CASE("verify char grid") {
  const Outcome r = Run({"verify", "--suite", "char", "--grid", "n<=4,m<=4"});
  CHECK(r.status == cli::kExitOk);
  int pass_lines = 0;
  for (const auto& line : Lines(r.out)) pass_lines += line.rfind("PASS  ", 0) == 0;
  CHECK(pass_lines == 16);
  CHECK(Lines(r.out).back() == "char: 16/16 passed");
}

TEST_CASE("verify exit status matches the report") {
  for (const auto& name : SuiteNames()) {
    CAPTURE(name);
    const Outcome r = Run({"verify", "--suite", name, "--json"});
    const bool passed = VerifySuite(name).passed();
    CHECK(r.status == (passed ? cli::kExitOk : cli::kExitFailure));
    CHECK(Json::parse(r.out)["suite"] == name);
  }
  CHECK(Run({"verify", "--suite", "all"}).status == cli::kExitOk);
}

TEST_CASE("verify seed is part of the grid") {
  const Outcome a = Run({"verify", "--suite", "faria", "--grid", "count=5", "--seed", "4"});
  const Outcome b = Run({"verify", "--suite", "faria", "--grid", "count=5,seed=4"});
  CHECK(a.out == b.out);
  CHECK(a.out != Run({"verify", "--suite", "faria", "--grid", "count=5", "--seed", "5"}).out);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(Run({}).status == cli::kExitUsage);
  CHECK(Run({"bogus"}).status == cli::kExitUsage);
  CHECK(Run({"spectrum", "--bogus"}).status == cli::kExitUsage);
  CHECK(Run({"verify", "--suite", "nope"}).status == cli::kExitUsage);
  CHECK(Run({"verify", "--suite", "char", "--grid", "n<=x"}).status == cli::kExitUsage);
  const Outcome dup = Run({"spectrum"}, "n 3\n0 1\n0 1\n");
  CHECK(dup.status == cli::kExitUsage);
  CHECK(dup.err.find("line 3") != std::string::npos);
  CHECK(Run({"spectrum"}, "n 2\n0 2\n").status == cli::kExitUsage);
  CHECK(Run({"--help"}).status == cli::kExitOk);
}

TEST_CASE("output is deterministic") {
  const std::string g = EmitGraph(BuildCnkm(6, 3, 2));
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"spectrum", "--json"}, {"charpoly", "--factored"}, {"metrics"}, {"find-sym", "--k", "3"}}) {
    CHECK(Run(cmd, g).out == Run(cmd, g).out);
  }
}

}  // namespace
}  // namespace ksym
