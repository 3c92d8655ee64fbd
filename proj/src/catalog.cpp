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

#include "ksym/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ksym/error.hpp"
#include "ksym/families.hpp"

namespace ksym {

namespace {

Graph FromEdges(int n, std::initializer_list<Edge> edges) { return Graph(n, edges); }

Graph CompleteBipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

// Smallest edge bitmask over relabelings that list vertices by decreasing
// degree; isomorphic graphs give the same code.
std::uint32_t CanonicalCode(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  // Degree classes are contiguous in `order`; permute within each class.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~0u;
  std::vector<int> pos = order;  // pos[slot] = vertex
  auto code_of = [&]() {
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(pos[i], pos[j])) code |= 1u << bit;
    return code;
  };
  // Odometer over the per-class permutations.
  for (auto& c : classes) std::sort(pos.begin() + c.first, pos.begin() + c.second);
  while (true) {
    best = std::min(best, code_of());
    size_t idx = 0;
    while (idx < classes.size() &&
           !std::next_permutation(pos.begin() + classes[idx].first,
                                  pos.begin() + classes[idx].second)) {
      ++idx;
    }
    if (idx == classes.size()) break;
  }
  return best;
}

std::string TreeCode(const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> children;
  for (int w : adj[root])
    if (w != parent) children.push_back(TreeCode(adj, w, root));
  std::sort(children.begin(), children.end());
  std::string s = "(";
  for (const auto& c : children) s += c;
  return s + ")";
}

std::vector<int> TreeCentres(const Graph& t) {
  const int n = t.order();
  std::vector<int> degree = t.DegreeSequence();
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) leaves.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int leaf : leaves) {
      --remaining;
      for (int w : t.neighbors(leaf))
        if (--degree[w] == 1) next.push_back(w);
    }
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::string CanonicalTree(const Graph& t) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(t.order()));
  for (int v = 0; v < t.order(); ++v) adj[v] = t.neighbors(v);
  std::string best;
  for (int c : TreeCentres(t)) {
    std::string code = TreeCode(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

Graph PruferDecode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u == -1) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace

std::vector<NamedGraph> Catalog() {
  std::vector<NamedGraph> c;
  for (int n = 1; n <= 5; ++n) c.push_back({"K" + std::to_string(n), Complete(n)});
  for (int n = 2; n <= 4; ++n) c.push_back({"E" + std::to_string(n), EmptyGraph(n)});
  for (int n = 3; n <= 6; ++n) c.push_back({"P" + std::to_string(n), Path(n)});
  for (int n = 3; n <= 7; ++n) c.push_back({"C" + std::to_string(n), Cycle(n)});
  c.push_back({"K1,3", CompleteBipartite(1, 3)});
  c.push_back({"K1,4", CompleteBipartite(1, 4)});
  c.push_back({"K2,3", CompleteBipartite(2, 3)});
  c.push_back({"K3,3", CompleteBipartite(3, 3)});
  c.push_back({"paw", FromEdges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})});
  c.push_back({"diamond", FromEdges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
  c.push_back({"bull", FromEdges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}})});
  c.push_back({"house", FromEdges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})});
  c.push_back({"2K2", Copies(Complete(2), 2)});
  c.push_back({"K3+K1", DisjointUnion(Complete(3), Complete(1))});
  c.push_back({"prism", CartesianProduct(Cycle(3), Complete(2))});
  c.push_back({"Q3", CartesianProduct(CartesianProduct(Complete(2), Complete(2)), Complete(2))});
  c.push_back({"petersen", Petersen()});
  c.push_back({"C(2,1)", BuildCnm(2, 1)});
  c.push_back({"C(2,2)", BuildCnm(2, 2)});
  c.push_back({"C(1,3)", BuildCnm(1, 3)});
  c.push_back({"C(3,4)", BuildCnm(3, 4)});
  return c;
}

std::vector<Graph> AllGraphs(int n) {
  if (n < 1 || n > 6) throw Error(ErrorCode::kInvalidArgument, "AllGraphs supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint32_t> seen;
  std::vector<Graph> result;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask & (1u << b)) e.push_back(slots[b]);
    Graph g(n, e);
    if (seen.insert(CanonicalCode(g)).second) result.push_back(std::move(g));
  }
  return result;
}

std::vector<Graph> AllConnectedGraphs(int n) {
  std::vector<Graph> result;
  for (auto& g : AllGraphs(n))
    if (IsConnected(g)) result.push_back(std::move(g));
  return result;
}

std::vector<Graph> AllTrees(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "tree order must be at least 1");
  if (n == 1) return {EmptyGraph(1)};
  if (n == 2) return {Complete(2)};
  std::vector<int> seq(static_cast<size_t>(n - 2), 0);
  std::set<std::string> seen;
  std::vector<Graph> result;
  while (true) {
    Graph t = PruferDecode(seq, n);
    if (seen.insert(CanonicalTree(t)).second) result.push_back(std::move(t));
    size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return result;
}

std::vector<Graph> RandomGraphs(int count, std::uint64_t seed, int min_order, int max_order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order_dist(min_order, max_order);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i) {
    const int n = order_dist(rng);
    const double p = density(rng);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) e.emplace_back(u, v);
    graphs.emplace_back(n, e);
  }
  return graphs;
}

}  // namespace ksym
