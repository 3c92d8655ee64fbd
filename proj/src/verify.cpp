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

#include "ksym/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ksym/catalog.hpp"
#include "ksym/error.hpp"
#include "ksym/families.hpp"
#include "ksym/spectra.hpp"
#include "ksym/symmetry.hpp"

namespace ksym {

bool VerificationReport::passed() const { return failures() == 0; }

int VerificationReport::failures() const {
  return static_cast<int>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; }));
}

Grid Grid::Parse(const std::string& spec) {
  Grid grid;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    size_t op = token.find_first_of("<>=");
    if (op == std::string::npos || op == 0) {
      throw Error(ErrorCode::kParse, "bad grid term '" + token + "'");
    }
    const std::string key = token.substr(0, op);
    std::string rel;
    size_t pos = op;
    while (pos < token.size() && std::string("<>=").find(token[pos]) != std::string::npos) {
      rel += token[pos++];
    }
    int value = 0;
    try {
      size_t used = 0;
      value = std::stoi(token.substr(pos), &used);
      if (pos + used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad grid value in '" + token + "'");
    }
    auto& range = grid.bounds_[key];
    if (rel == "<=") {
      range.second = value;
    } else if (rel == "<") {
      range.second = value - 1;
    } else if (rel == ">=") {
      range.first = value;
    } else if (rel == ">") {
      range.first = value + 1;
    } else if (rel == "=" || rel == "==") {
      range.first = range.second = value;
    } else {
      throw Error(ErrorCode::kParse, "bad grid relation in '" + token + "'");
    }
  }
  return grid;
}

std::pair<int, int> Grid::Range(const std::string& key, int lo, int hi) const {
  auto it = bounds_.find(key);
  if (it == bounds_.end()) return {lo, hi};
  return {it->second.first.value_or(lo), it->second.second.value_or(hi)};
}

int Grid::Value(const std::string& key, int fallback) const {
  auto it = bounds_.find(key);
  if (it == bounds_.end()) return fallback;
  if (it->second.second) return *it->second.second;
  return it->second.first.value_or(fallback);
}

std::string Grid::ToString() const {
  std::string s;
  for (const auto& [key, range] : bounds_) {
    if (!s.empty()) s += ",";
    if (range.first && range.second && *range.first == *range.second) {
      s += key + "=" + std::to_string(*range.first);
      continue;
    }
    if (range.first) s += key + ">=" + std::to_string(*range.first);
    if (range.first && range.second) s += ",";
    if (range.second) s += key + "<=" + std::to_string(*range.second);
  }
  return s;
}

Integer EnumerateSpanningTrees(const Graph& g) {
  const int n = g.order();
  const auto& edges = g.edges();
  const int need = n - 1;
  if (need == 0) return 1;
  if (static_cast<int>(edges.size()) < need) return 0;
  Integer count = 0;
  std::vector<int> pick(static_cast<size_t>(need));
  std::iota(pick.begin(), pick.end(), 0);
  const int m = static_cast<int>(edges.size());
  std::vector<int> parent(static_cast<size_t>(n));
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int idx : pick) {
      const int a = find(edges[idx].first);
      const int b = find(edges[idx].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) ++count;
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

namespace {

using Suite = std::function<void(const Grid&, VerificationReport&)>;

std::string Params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ",";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

void Add(VerificationReport& r, std::string params, std::string expected, std::string computed,
         bool pass) {
  r.results.push_back({std::move(params), std::move(expected), std::move(computed), pass});
}

// Compares two polynomials coefficient for coefficient.
void AddPolynomial(VerificationReport& r, std::string params, const IntPolynomial& expected,
                   const IntPolynomial& computed) {
  Add(r, std::move(params), ToString(expected), ToString(computed), expected == computed);
}

std::string SpectrumString(const Spectrum& s) {
  return FactoredString({s.integer_eigenvalues, s.residual});
}

// Regular connected k-symmetric graphs used as join/orbit parts.
std::vector<SymmetricPart> PartOptions(int k, const std::string& family) {
  std::vector<SymmetricPart> options;
  auto add = [&](const Graph& g, const Permutation& p) {
    options.push_back({g, VerifyKSymmetric(g, p, k)});
  };
  if (family == "K" || family == "mixed") add(Complete(k), Rotation(k));
  if ((family == "C" || family == "mixed") && k >= 3) add(Cycle(k), Rotation(k));
  if (family == "mixed") {
    add(Cycle(2 * k), RotationBy(2 * k, 2));
    add(CartesianProduct(Complete(k), Complete(2)),
        [&] {
          Permutation p(static_cast<size_t>(2 * k));
          for (int x = 0; x < k; ++x)
            for (int y = 0; y < 2; ++y) p[x * 2 + y] = ((x + 1) % k) * 2 + y;
          return p;
        }());
  }
  return options;
}

std::vector<SymmetricPart> PickParts(const std::vector<SymmetricPart>& options, int l) {
  std::vector<SymmetricPart> parts;
  for (int i = 0; i < l; ++i) parts.push_back(options[static_cast<size_t>(i) % options.size()]);
  return parts;
}

void SuiteChar(const Grid& grid, VerificationReport& r) {
  auto [n_lo, n_hi] = grid.Range("n", 1, 4);
  auto [m_lo, m_hi] = grid.Range("m", 1, 4);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int m = m_lo; m <= m_hi; ++m)
      AddPolynomial(r, Params({{"n", n}, {"m", m}}), ClosedCnmCharpoly(n, m),
                    LaplacianCharpoly(BuildCnm(n, m)));
}

void SuiteCharK(const Grid& grid, VerificationReport& r) {
  auto [n_lo, n_hi] = grid.Range("n", 1, 6);
  auto [k_lo, k_hi] = grid.Range("k", 1, n_hi);
  auto [m_lo, m_hi] = grid.Range("m", 1, 3);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = std::max(1, k_lo); k <= std::min(n, k_hi); ++k) {
      if (n % k != 0) continue;
      for (int m = m_lo; m <= m_hi; ++m)
        AddPolynomial(r, Params({{"n", n}, {"k", k}, {"m", m}}), ClosedCnkmCharpoly(n, k, m),
                      LaplacianCharpoly(BuildCnkm(n, k, m)));
    }
}

void SuiteMultm(const Grid& grid, VerificationReport& r) {
  auto [k_lo, k_hi] = grid.Range("k", 2, 4);
  auto [l_lo, l_hi] = grid.Range("l", 2, 4);
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const char* family : {"K", "C", "mixed"}) {
      const auto options = PartOptions(k, family);
      if (options.empty()) continue;
      for (int l = l_lo; l <= l_hi; ++l) {
        const JoinedFamily joined = KJoinAll(PickParts(options, l));
        const int n = joined.graph.order() / k;
        const EquitablePartition pi = VerifyEquitable(joined.graph, joined.blocks);
        const IntPolynomial divisor = CharacteristicPolynomial(DivisorMatrix(pi));
        const IntPolynomial expected_divisor =
            IntPolynomial::X() * IntPolynomial::Linear(n).Pow(static_cast<unsigned>(l - 1));
        const int mult = Multiplicity(joined.graph, n);
        const bool contained = DivisorContained(joined.graph, pi);
        std::string params = Params({{"k", k}, {"l", l}}) + ",parts=" + family;
        Add(r, params,
            "m_G(" + std::to_string(n) + ")>=" + std::to_string(l - 1) +
                "; mu(L^pi)=" + ToString(expected_divisor) + "; contained",
            "m_G(" + std::to_string(n) + ")=" + std::to_string(mult) +
                "; mu(L^pi)=" + ToString(divisor) + (contained ? "; contained" : "; NOT contained"),
            mult >= l - 1 && divisor == expected_divisor && contained);
      }
    }
  }
}

void SuiteKmProduct(const Grid& grid, VerificationReport& r) {
  auto [m_lo, m_hi] = grid.Range("m", 1, 4);
  const std::vector<NamedGraph> bases = {
      {"C3", Cycle(3)}, {"C4", Cycle(4)}, {"C5", Cycle(5)}, {"K4", Complete(4)}};
  for (const auto& [name, g] : bases) {
    const CyclicAction rot = VerifyKSymmetric(g, Rotation(g.order()), g.order());
    for (int m = m_lo; m <= m_hi; ++m) {
      std::vector<SymmetricPart> parts(static_cast<size_t>(m), SymmetricPart{g, rot});
      const JoinedFamily joined = KJoinAll(parts);
      const Graph product = CartesianProduct(Complete(m), g);
      const int mult = Multiplicity(product, m);
      Add(r, "G=" + name + "," + Params({{"m", m}}),
          "join=K_m box G; m_G(" + std::to_string(m) + ")>=" + std::to_string(m - 1),
          std::string(joined.graph == product ? "join=K_m box G" : "join!=K_m box G") + "; m_G(" +
              std::to_string(m) + ")=" + std::to_string(mult),
          joined.graph == product && mult >= m - 1);
    }
  }
}

void SuiteOrbit(const Grid& grid, VerificationReport& r) {
  auto [k_lo, k_hi] = grid.Range("k", 2, 3);
  auto [l_lo, l_hi] = grid.Range("l", 2, 4);
  for (int k = k_lo; k <= k_hi; ++k)
    for (int l = l_lo; l <= l_hi; ++l) {
      const OrbitConstruction oc = BuildOrbitConstruction(k, StandardOrbitParts(k, l));
      const int n = oc.base_size;
      const IntPolynomial divisor = CharacteristicPolynomial(DivisorMatrix(oc.partition));
      const IntPolynomial expected_divisor =
          IntPolynomial::Linear(1).Pow(static_cast<unsigned>(l - 1)) * IntPolynomial::X() *
          IntPolynomial::Linear(n + 1);
      const int mult = Multiplicity(oc.graph, 1);
      const bool contained = DivisorContained(oc.graph, oc.partition);
      Add(r, Params({{"k", k}, {"l", l}}),
          "m_G(1)>=" + std::to_string(l - 1) + "; mu(L^pi)=" + ToString(expected_divisor) +
              "; contained",
          "m_G(1)=" + std::to_string(mult) + "; mu(L^pi)=" + ToString(divisor) +
              (contained ? "; contained" : "; NOT contained"),
          mult >= l - 1 && divisor == expected_divisor && contained);
    }
}

void SuiteTwoConnPrime(const Grid& grid, VerificationReport& r) {
  auto [k_lo, k_hi] = grid.Range("k", 2, 3);
  auto [l_lo, l_hi] = grid.Range("l", 2, 4);
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int l = l_lo; l <= l_hi; ++l) {
      const OrbitConstruction oc = BuildOrbitConstruction(k, StandardOrbitParts(k, l));
      const GraphMetrics metrics = Metrics(oc.graph);
      const PrimalityVerdict verdict = PrimalityWitness(oc.graph);
      const bool prime = verdict.verdict == Primality::kPrime;
      Add(r, Params({{"k", k}, {"l", l}}), "two_connected=true; prime",
          std::string("two_connected=") + (metrics.two_connected ? "true" : "false") +
              (prime ? "; prime (witness " + std::to_string(*verdict.witness) + ")" : "; unknown"),
          metrics.two_connected && prime);
    }
    // A disconnected part (the empty graph on k vertices) leaves a cut vertex.
    const Graph empty = EmptyGraph(k);
    std::vector<SymmetricPart> parts = {{empty, VerifyKSymmetric(empty, Rotation(k), k)}};
    for (const auto& p : StandardOrbitParts(k, 1)) parts.push_back(p);
    const OrbitConstruction oc = BuildOrbitConstruction(k, parts);
    const bool two_connected = Metrics(oc.graph).two_connected;
    Add(r, Params({{"k", k}}) + ",parts=empty+K", "two_connected=false",
        std::string("two_connected=") + (two_connected ? "true" : "false"), !two_connected);
  }
}

void CheckFaria(VerificationReport& r, const std::string& params, const Graph& g) {
  const GraphMetrics metrics = Metrics(g);
  const int mult = Multiplicity(g, 1);
  const int bound = metrics.pendants - metrics.quasi_pendants;
  Add(r, params, "m_G(1)>=" + std::to_string(bound), "m_G(1)=" + std::to_string(mult),
      mult >= bound);
}

void SuiteFaria(const Grid& grid, VerificationReport& r) {
  auto [n_lo, n_hi] = grid.Range("n", 1, 8);
  for (int n = n_lo; n <= n_hi; ++n) {
    int index = 0;
    for (const auto& t : AllTrees(n)) {
      CheckFaria(r, "tree," + Params({{"n", n}, {"index", index++}}), t);
    }
  }
  const int count = grid.Value("count", 100);
  const int seed = grid.Value("seed", 0);
  int index = 0;
  for (const auto& g : RandomGraphs(count, static_cast<std::uint64_t>(seed), 2, 10)) {
    CheckFaria(r, "random," + Params({{"seed", seed}, {"index", index++}}), g);
  }
}

bool IsComplete(const Graph& g) {
  const long n = g.order();
  return static_cast<long>(g.size()) == n * (n - 1) / 2;
}

void CheckFiedler(VerificationReport& r, const std::string& params, const Graph& g) {
  if (g.order() < 2) return;
  const int kappa = VertexConnectivity(g);
  const Spectrum s = ComputeSpectrum(g);
  if (IsComplete(g)) {
    // The bound needs a non-complete graph: K_n has second eigenvalue n = kappa + 1.
    const int below = CountEigenvaluesAtMost(s, kappa);
    const int through = CountEigenvaluesAtMost(s, kappa + 1);
    Add(r, params + ",complete",
        "#{lambda<=" + std::to_string(kappa) + "}=1,#{lambda<=" + std::to_string(kappa + 1) +
            "}=" + std::to_string(g.order()),
        "#{lambda<=" + std::to_string(kappa) + "}=" + std::to_string(below) + ",#{lambda<=" +
            std::to_string(kappa + 1) + "}=" + std::to_string(through),
        below == 1 && through == g.order());
    return;
  }
  const int at_most = CountEigenvaluesAtMost(s, kappa);
  Add(r, params, "#{lambda<=" + std::to_string(kappa) + "}>=2",
      "#{lambda<=" + std::to_string(kappa) + "}=" + std::to_string(at_most), at_most >= 2);
}

void SuiteFiedler(const Grid& grid, VerificationReport& r) {
  for (const auto& [name, g] : Catalog()) CheckFiedler(r, "catalog=" + name, g);
  const int count = grid.Value("count", 100);
  const int seed = grid.Value("seed", 0);
  int index = 0;
  for (const auto& g : RandomGraphs(count, static_cast<std::uint64_t>(seed), 2, 10)) {
    CheckFiedler(r, "random," + Params({{"seed", seed}, {"index", index++}}), g);
  }
}

void SuiteKirchhoff(const Grid& grid, VerificationReport& r) {
  auto [n_lo, n_hi] = grid.Range("n", 1, 6);
  for (int n = n_lo; n <= std::min(n_hi, 6); ++n) {
    int index = 0;
    for (const auto& g : AllConnectedGraphs(n)) {
      const Integer matrix_tree = SpanningTrees(g);
      const Integer enumerated = EnumerateSpanningTrees(g);
      std::string expected = enumerated.get_str();
      std::string computed = matrix_tree.get_str();
      bool pass = matrix_tree == enumerated;
      const Spectrum s = ComputeSpectrum(g);
      if (s.integral()) {
        Integer product = 1;
        for (const auto& v : s.IntegerValues())
          if (v != 0) product *= v;
        expected += "; n*tau=" + product.get_str();
        computed += "; n*tau=" + Integer(matrix_tree * n).get_str();
        pass = pass && product == matrix_tree * n;
      }
      Add(r, "connected," + Params({{"n", n}, {"index", index++}}), expected, computed, pass);
    }
  }
  const int cayley_hi = grid.Value("cayley", 7);
  for (int n = 1; n <= cayley_hi; ++n) {
    Integer cayley = 1;
    for (int i = 0; i + 2 < n; ++i) cayley *= n;
    const Integer tau = SpanningTrees(Complete(n));
    Add(r, "K," + Params({{"n", n}}), cayley.get_str(), tau.get_str(), cayley == tau);
  }
  const Graph two_k2 = Copies(Complete(2), 2);
  Add(r, "2K2", "0", SpanningTrees(two_k2).get_str(), SpanningTrees(two_k2) == 0);
}

std::vector<NamedGraph> IntegralCatalog(int max_order) {
  std::vector<NamedGraph> out;
  for (auto& ng : Catalog())
    if (ng.graph.order() <= max_order && IsLaplacianIntegral(ng.graph)) out.push_back(ng);
  return out;
}

void SuiteCartesianSum(const Grid& grid, VerificationReport& r) {
  const int max_order = grid.Value("n", 5);
  const auto graphs = IntegralCatalog(max_order);
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Spectrum si = ComputeSpectrum(graphs[i].graph);
    for (size_t j = i; j < graphs.size(); ++j) {
      const Spectrum sj = ComputeSpectrum(graphs[j].graph);
      std::vector<Integer> sums;
      for (const auto& a : si.IntegerValues())
        for (const auto& b : sj.IntegerValues()) sums.push_back(a + b);
      const Spectrum expected = SpectrumFromValues(std::move(sums));
      const Spectrum computed =
          ComputeSpectrum(CartesianProduct(graphs[i].graph, graphs[j].graph));
      Add(r, "G=" + graphs[i].name + ",H=" + graphs[j].name, SpectrumString(expected),
          SpectrumString(computed), expected == computed);
    }
  }
}

void SuiteComplement(const Grid& grid, VerificationReport& r) {
  auto check = [&](const std::string& params, const Graph& g) {
    const Spectrum s = ComputeSpectrum(g);
    if (!s.integral()) return;
    const Spectrum expected = ComplementSpectrum(s);
    const Spectrum computed = ComputeSpectrum(Complement(g));
    Add(r, params, SpectrumString(expected), SpectrumString(computed), expected == computed);
  };
  for (const auto& [name, g] : Catalog()) check("catalog=" + name, g);
  const int max_all = grid.Value("n", 5);
  for (int n = 1; n <= std::min(max_all, 6); ++n) {
    int index = 0;
    for (const auto& g : AllGraphs(n)) check("all," + Params({{"n", n}, {"index", index++}}), g);
  }
}

void SuiteSpacapan(const Grid& grid, VerificationReport& r) {
  const int max_order = std::min(grid.Value("n", 5), 6);
  std::vector<std::pair<std::string, Graph>> graphs;
  // The product formula is stated for nontrivial factors; K_1 would give kappa 0.
  for (int n = 2; n <= max_order; ++n) {
    int index = 0;
    for (auto& g : AllConnectedGraphs(n))
      graphs.emplace_back(Params({{"n", n}, {"index", index++}}), std::move(g));
  }
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i; j < graphs.size(); ++j) {
      const int formula = SpacapanConnectivity(graphs[i].second, graphs[j].second);
      const int exact = VertexConnectivity(CartesianProduct(graphs[i].second, graphs[j].second));
      Add(r, "G=(" + graphs[i].first + "),H=(" + graphs[j].first + ")", std::to_string(formula),
          std::to_string(exact), formula == exact);
    }
}

void CheckContainment(VerificationReport& r, const std::string& params, const Graph& g,
                      const EquitablePartition& pi) {
  const bool ok = DivisorContained(g, pi);
  Add(r, params, "contained", ok ? "contained" : "NOT contained", ok);
}

void SuiteEquitableContainment(const Grid& grid, VerificationReport& r) {
  auto [n_lo, n_hi] = grid.Range("n", 1, 4);
  auto [m_lo, m_hi] = grid.Range("m", 1, 3);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      for (int m = m_lo; m <= m_hi; ++m) {
        const Graph g = BuildCnkm(n, k, m);
        std::vector<std::vector<Vertex>> blocks(1);
        for (int v = 0; v < k; ++v) blocks[0].push_back(v);
        for (int c = 0; c < m; ++c) {
          std::vector<Vertex> block;
          for (int v = 0; v < n; ++v) block.push_back(k + c * n + v);
          blocks.push_back(std::move(block));
        }
        CheckContainment(r, "C(n,k,m)," + Params({{"n", n}, {"k", k}, {"m", m}}), g,
                         VerifyEquitable(g, blocks));
      }
    }
  for (int k = 2; k <= 3; ++k)
    for (int l = 2; l <= 3; ++l) {
      const OrbitConstruction oc = BuildOrbitConstruction(k, StandardOrbitParts(k, l));
      CheckContainment(r, "orbit," + Params({{"k", k}, {"l", l}}), oc.graph, oc.partition);
      const JoinedFamily joined = KJoinAll(PickParts(PartOptions(k, "mixed"), l));
      CheckContainment(r, "join," + Params({{"k", k}, {"l", l}}), joined.graph,
                       VerifyEquitable(joined.graph, joined.blocks));
    }
  int count = 0;
  for (const auto& [name, g] : Catalog()) {
    if (count++ >= grid.Value("catalog", 20)) break;
    CheckContainment(r, "singleton,catalog=" + name, g, SingletonPartition(g));
    const auto degrees = g.DegreeSequence();
    if (std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) ==
        degrees.end()) {
      CheckContainment(r, "one-block,catalog=" + name, g, OneBlockPartition(g));
    }
  }
}

const std::vector<std::pair<std::string, Suite>>& Suites() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"char", SuiteChar},
      {"char-k", SuiteCharK},
      {"multm", SuiteMultm},
      {"km-product", SuiteKmProduct},
      {"orbit", SuiteOrbit},
      {"two-conn-prime", SuiteTwoConnPrime},
      {"faria", SuiteFaria},
      {"fiedler", SuiteFiedler},
      {"kirchhoff", SuiteKirchhoff},
      {"cartesian-sum", SuiteCartesianSum},
      {"complement", SuiteComplement},
      {"spacapan", SuiteSpacapan},
      {"equitable-containment", SuiteEquitableContainment},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, suite] : Suites()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport VerifySuite(const std::string& name, const Grid& grid) {
  for (const auto& [suite_name, suite] : Suites()) {
    if (suite_name == name) {
      VerificationReport report;
      report.suite = name;
      report.grid = grid.ToString();
      suite(grid, report);
      return report;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace ksym
