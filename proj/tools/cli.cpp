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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ksym/catalog.hpp"
#include "ksym/error.hpp"
#include "ksym/families.hpp"
#include "ksym/io.hpp"
#include "ksym/spectra.hpp"
#include "ksym/symmetry.hpp"
#include "ksym/verify.hpp"

namespace ksym::cli {

namespace {

class InputSource {
 public:
  explicit InputSource(std::istream& in) : in_(in) {}

  Graph Read(const std::string& path) const {
    if (path == "-") return ParseGraph(in_);
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
    try {
      return ParseGraph(file);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }

 private:
  std::istream& in_;
};

Graph NamedOrGenerated(const std::string& name, int n) {
  static const std::vector<std::pair<std::string, GraphKind>> kinds = {
      {"complete", GraphKind::kComplete}, {"empty", GraphKind::kEmpty},
      {"cycle", GraphKind::kCycle},       {"path", GraphKind::kPath},
      {"petersen", GraphKind::kPetersen}};
  for (const auto& [kind_name, kind] : kinds) {
    if (kind_name == name) return Generate(kind, kind == GraphKind::kPetersen ? 10 : n);
  }
  for (auto& named : Catalog()) {
    if (named.name == name) return named.graph;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown graph name '" + name + "'");
}

Json GraphJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"order", g.order()}, {"edges", edges}};
}

void WriteJson(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Laplacian spectra and k-symmetric graph constructions", "ksym"};
  app.require_subcommand(1);
  InputSource source(in);
  std::function<int()> action;

  std::string input = "-";
  bool json = false;

  // gen
  auto* gen = app.add_subcommand("gen", "Write a family or named graph as an edge list");
  std::string family;
  int n = 1, m = 1, k = 1, l = 2;
  std::string name;
  gen->add_option("--family", family, "cnm | cnkm | orbit | named")
      ->required()
      ->check(CLI::IsMember({"cnm", "cnkm", "orbit", "named"}));
  gen->add_option("--n", n, "clique size or graph order")->check(CLI::PositiveNumber);
  gen->add_option("--m", m, "number of clique copies")->check(CLI::PositiveNumber);
  gen->add_option("--k", k, "symmetry order")->check(CLI::PositiveNumber);
  gen->add_option("--l", l, "number of orbit parts")->check(CLI::PositiveNumber);
  gen->add_option("--name", name, "complete, empty, cycle, path, petersen or a catalog name");
  gen->callback([&] {
    action = [&] {
      Graph g = Complete(1);
      if (family == "cnm") {
        g = BuildCnm(n, m);
      } else if (family == "cnkm") {
        g = BuildCnkm(n, k, m);
      } else if (family == "orbit") {
        g = BuildOrbitConstruction(k, StandardOrbitParts(k, l)).graph;
      } else {
        if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "--name is required");
        g = NamedOrGenerated(name, n);
      }
      out << EmitGraph(g);
      return kExitOk;
    };
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Exact Laplacian spectrum");
  spectrum->add_option("input", input, "edge-list file, '-' for stdin");
  spectrum->add_flag("--json", json, "emit JSON");
  spectrum->callback([&] {
    action = [&] {
      const Spectrum s = ComputeSpectrum(source.Read(input));
      if (json) {
        WriteJson(out, ToJson(s));
      } else {
        out << "order " << s.order << "\n";
        out << "integral " << (s.integral() ? "yes" : "no") << "\n";
        out << "eigenvalues " << SpectrumText(s) << "\n";
      }
      return kExitOk;
    };
  });

  // charpoly
  auto* charpoly = app.add_subcommand("charpoly", "Laplacian characteristic polynomial");
  bool factored = false;
  charpoly->add_option("input", input, "edge-list file, '-' for stdin");
  charpoly->add_flag("--json", json, "coefficients as decimal strings, ascending");
  charpoly->add_flag("--factored", factored, "integer roots factored out");
  charpoly->callback([&] {
    action = [&] {
      const IntPolynomial p = LaplacianCharpoly(source.Read(input));
      if (json) {
        WriteJson(out, ToJson(p));
      } else if (factored) {
        out << FactoredString(IntegerRoots(p)) << "\n";
      } else {
        out << ToString(p) << "\n";
      }
      return kExitOk;
    };
  });

  // integral
  auto* integral = app.add_subcommand("integral", "Is the graph Laplacian integral");
  integral->add_option("input", input, "edge-list file, '-' for stdin");
  integral->add_flag("--json", json, "emit JSON");
  integral->callback([&] {
    action = [&] {
      const Spectrum s = ComputeSpectrum(source.Read(input));
      if (json) {
        WriteJson(out, Json{{"integral", s.integral()}, {"spectrum", ToJson(s)}});
      } else {
        out << (s.integral() ? "yes" : "no") << "\n" << SpectrumText(s) << "\n";
      }
      return kExitOk;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Laplacian integral C(n,m) pairs");
  int max_n = 4, max_m = 4;
  bool brute = false;
  search->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  search->add_option("--max-m", max_m)->check(CLI::PositiveNumber);
  search->add_flag("--brute-force", brute, "full spectrum instead of the closed form");
  search->add_flag("--json", json, "emit JSON");
  search->callback([&] {
    action = [&] {
      const auto pairs = SearchIntegralCnm(max_n, max_m, brute);
      if (json) {
        WriteJson(out, SearchPairsJson(max_n, max_m, pairs));
      } else {
        for (const auto& [pn, pm] : pairs) out << pn << " " << pm << "\n";
      }
      return kExitOk;
    };
  });

  // join
  auto* join = app.add_subcommand("join", "k-symmetric join of two graphs");
  std::string g1_path, g2_path, a1_text, a2_text, b1_text, b2_text;
  join->add_option("--g1", g1_path, "first graph")->required();
  join->add_option("--g2", g2_path, "second graph")->required();
  join->add_option("--k", k, "symmetry order")->required()->check(CLI::PositiveNumber);
  join->add_option("--a1", a1_text, "action on g1 in cycle notation")->required();
  join->add_option("--a2", a2_text, "action on g2 in cycle notation")->required();
  join->add_option("--b1", b1_text, "base of g1 (default: least vertex per orbit)");
  join->add_option("--b2", b2_text, "base of g2 (default: least vertex per orbit)");
  join->add_flag("--json", json, "emit graph, action and base as JSON");
  join->callback([&] {
    action = [&] {
      const Graph g1 = source.Read(g1_path);
      const Graph g2 = source.Read(g2_path);
      const CyclicAction a1 = VerifyKSymmetric(g1, ParseCycles(a1_text, g1.order()), k);
      const CyclicAction a2 = VerifyKSymmetric(g2, ParseCycles(a2_text, g2.order()), k);
      const Base b1 = b1_text.empty() ? BaseOf(a1) : ParseVertexList(b1_text);
      const Base b2 = b2_text.empty() ? BaseOf(a2) : ParseVertexList(b2_text);
      const JoinResult r = KJoin(g1, a1, b1, g2, a2, b2);
      if (json) {
        WriteJson(out, Json{{"graph", GraphJson(r.graph)},
                            {"action", ToJson(r.action)},
                            {"base", r.base}});
      } else {
        out << "# action " << CycleString(r.action.sigma()) << "\n" << EmitGraph(r.graph);
      }
      return kExitOk;
    };
  });

  // find-sym
  auto* find = app.add_subcommand("find-sym", "Search for a k-symmetric automorphism");
  std::uint64_t budget = kDefaultSearchBudget;
  find->add_option("input", input, "edge-list file, '-' for stdin");
  find->add_option("--k", k, "symmetry order")->required()->check(CLI::PositiveNumber);
  find->add_option("--budget", budget, "node-expansion limit");
  find->add_flag("--json", json, "emit JSON");
  find->callback([&] {
    action = [&] {
      const SearchResult r = FindKSymmetric(source.Read(input), k, budget);
      if (json) {
        WriteJson(out, ToJson(r));
        return kExitOk;
      }
      switch (r.status) {
        case SearchStatus::kFound:
          out << "found " << CycleString(r.action->sigma()) << "\n";
          break;
        case SearchStatus::kNotFound:
          out << "not_found\n";
          break;
        case SearchStatus::kBudgetExhausted:
          out << "budget_exhausted\n";
          break;
      }
      out << "expansions " << r.expansions << "\n";
      return kExitOk;
    };
  });

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Connectivity, pendants and primality verdict");
  metrics->add_option("input", input, "edge-list file, '-' for stdin");
  metrics->add_flag("--json", json, "emit JSON");
  metrics->callback([&] {
    action = [&] {
      const Graph g = source.Read(input);
      const GraphMetrics mt = Metrics(g);
      std::string verdict = "unknown";
      Json witness = nullptr;
      if (g.order() >= 2 && mt.components == 1) {
        const PrimalityVerdict pv = PrimalityWitness(g);
        if (pv.verdict == Primality::kPrime) {
          verdict = "prime";
          witness = *pv.witness;
        }
      }
      if (json) {
        WriteJson(out, Json{{"order", g.order()},
                            {"size", g.size()},
                            {"components", mt.components},
                            {"min_degree", mt.min_degree},
                            {"kappa", mt.connectivity},
                            {"pendants", mt.pendants},
                            {"quasi_pendants", mt.quasi_pendants},
                            {"two_connected", mt.two_connected},
                            {"primality", verdict},
                            {"witness", witness}});
        return kExitOk;
      }
      out << "order " << g.order() << "\nsize " << g.size() << "\ncomponents " << mt.components
          << "\nmin_degree " << mt.min_degree << "\nkappa " << mt.connectivity << "\npendants "
          << mt.pendants << "\nquasi_pendants " << mt.quasi_pendants << "\ntwo_connected "
          << (mt.two_connected ? "yes" : "no") << "\nprimality " << verdict;
      if (!witness.is_null()) out << " (witness " << witness.get<int>() << ")";
      out << "\n";
      return kExitOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, grid_spec;
  std::optional<int> seed;
  std::vector<std::string> suite_choices = SuiteNames();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--grid", grid_spec, "e.g. n<=4,m<=4");
  verify->add_option("--seed", seed, "seed for randomized instances (default 0)");
  verify->add_flag("--json", json, "emit JSON");
  verify->callback([&] {
    action = [&] {
      Grid grid = Grid::Parse(grid_spec + (seed ? ",seed=" + std::to_string(*seed) : ""));
      std::vector<std::string> names =
          suite == "all" ? SuiteNames() : std::vector<std::string>{suite};
      bool all_pass = true;
      Json reports = Json::array();
      for (const auto& suite_name : names) {
        const VerificationReport report = VerifySuite(suite_name, grid);
        all_pass = all_pass && report.passed();
        if (json) {
          reports.push_back(ToJson(report));
        } else {
          out << ReportTable(report);
        }
      }
      if (json) WriteJson(out, names.size() == 1 ? reports[0] : reports);
      return all_pass ? kExitOk : kExitFailure;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ksym::cli
