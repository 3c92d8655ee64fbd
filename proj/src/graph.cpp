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

#include "ksym/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "ksym/error.hpp"

namespace ksym {

Graph::Graph(int order, const std::vector<Edge>& edges) : order_(order) {
  if (order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph order must be at least 1");
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate edge " + std::to_string(dup->first) +
                                                 " " + std::to_string(dup->second));
  }
  adjacency_.resize(static_cast<size_t>(order));
  matrix_.assign(static_cast<size_t>(order) * order, 0);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    matrix_[static_cast<size_t>(u) * order + v] = 1;
    matrix_[static_cast<size_t>(v) * order + u] = 1;
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::vector<int> Graph::DegreeSequence() const {
  std::vector<int> d(static_cast<size_t>(order_));
  for (int v = 0; v < order_; ++v) d[v] = degree(v);
  return d;
}

Graph Complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph EmptyGraph(int n) { return Graph(n, {}); }

Graph Cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph Path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph Generate(GraphKind kind, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  switch (kind) {
    case GraphKind::kComplete:
      return Complete(n);
    case GraphKind::kEmpty:
      return EmptyGraph(n);
    case GraphKind::kCycle:
      return Cycle(n);
    case GraphKind::kPath:
      return Path(n);
    case GraphKind::kPetersen:
      if (n != 10) throw Error(ErrorCode::kInvalidArgument, "the Petersen graph has n = 10");
      return Petersen();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind");
}

Graph Complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.order(), e);
}

Graph DisjointUnion(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  const int shift = g.order();
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  return Graph(g.order() + h.order(), e);
}

Graph Copies(const Graph& g, int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "copy count must be at least 1");
  Graph result = g;
  for (int i = 1; i < m; ++i) result = DisjointUnion(result, g);
  return result;
}

Graph CartesianProduct(const Graph& g, const Graph& h) {
  const int nh = h.order();
  std::vector<Edge> e;
  for (int a = 0; a < g.order(); ++a) {
    for (auto [u, v] : h.edges()) e.emplace_back(a * nh + u, a * nh + v);
  }
  for (auto [u, v] : g.edges()) {
    for (int b = 0; b < nh; ++b) e.emplace_back(u * nh + b, v * nh + b);
  }
  return Graph(g.order() * nh, e);
}

Graph Join(const Graph& g, const Graph& h) {
  std::vector<Edge> e = DisjointUnion(g, h).edges();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) e.emplace_back(u, g.order() + v);
  return Graph(g.order() + h.order(), e);
}

Graph InducedSubgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Edge> e;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(vertices.size()), e);
}

Graph Relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling has the wrong length");
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

int ComponentCount(const Graph& g) {
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  int components = 0;
  std::vector<Vertex> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool IsConnected(const Graph& g) { return ComponentCount(g) == 1; }

std::vector<Vertex> ArticulationPoints(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> cut(static_cast<size_t>(n), 0);
  int timer = 0;
  // Iterative DFS: (vertex, parent, next neighbor index).
  struct Frame {
    Vertex v;
    Vertex parent;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut[p] = 1;
        }
      }
    }
    if (root_children > 1) cut[root] = 1;
  }
  std::vector<Vertex> points;
  for (int v = 0; v < n; ++v)
    if (cut[v]) points.push_back(v);
  return points;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, s and t
// non-adjacent. Vertex v splits into in = 2v and out = 2v+1 joined by a
// unit arc; every graph edge gives two uncapacitated arcs out -> in.
int LocalConnectivity(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  const int nodes = 2 * n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<size_t>(nodes));
  auto add = [&](int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, kInf);
    add(2 * v + 1, 2 * u, kInf);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> via(static_cast<size_t>(nodes));
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> q;
    q.push(source);
    via[source] = -2;
    while (!q.empty() && via[sink] == -1) {
      const int x = q.front();
      q.pop();
      for (int a : out[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
    }
    if (via[sink] == -1) break;
    // Every augmenting path crosses at least one unit arc.
    for (int x = sink; x != source;) {
      const int a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int VertexConnectivity(const Graph& g) {
  const int n = g.order();
  if (!IsConnected(g)) return 0;
  int best = n - 1;
  // Some vertex among the first best+1 lies outside a minimum cut (Even).
  for (int s = 0; s < n && s <= best; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, LocalConnectivity(g, s, t));
    }
  }
  return best;
}

GraphMetrics Metrics(const Graph& g) {
  GraphMetrics m;
  const int n = g.order();
  std::vector<char> quasi(static_cast<size_t>(n), 0);
  m.min_degree = n;
  for (int v = 0; v < n; ++v) {
    m.min_degree = std::min(m.min_degree, g.degree(v));
    if (g.degree(v) == 1) {
      ++m.pendants;
      quasi[g.neighbors(v).front()] = 1;
    }
  }
  m.quasi_pendants = static_cast<int>(std::count(quasi.begin(), quasi.end(), 1));
  m.components = ComponentCount(g);
  m.connectivity = VertexConnectivity(g);
  m.two_connected = m.components == 1 && n >= 3 && ArticulationPoints(g).empty();
  return m;
}

int SpacapanConnectivity(const Graph& g, const Graph& h) {
  if (!IsConnected(g) || !IsConnected(h)) {
    throw Error(ErrorCode::kDisconnected, "Spacapan formula needs connected factors");
  }
  int min_deg_g = g.order(), min_deg_h = h.order();
  for (int v = 0; v < g.order(); ++v) min_deg_g = std::min(min_deg_g, g.degree(v));
  for (int v = 0; v < h.order(); ++v) min_deg_h = std::min(min_deg_h, h.degree(v));
  const int product_min_degree = min_deg_g + min_deg_h;
  return std::min({VertexConnectivity(g) * h.order(), VertexConnectivity(h) * g.order(),
                   product_min_degree});
}

bool ShareFourCycle(const Graph& g, Vertex u, Vertex a, Vertex b) {
  for (Vertex w : g.neighbors(a)) {
    if (w != u && w != b && g.adjacent(w, b)) return true;
  }
  return false;
}

PrimalityVerdict PrimalityWitness(const Graph& g) {
  if (g.order() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "primality test needs at least 2 vertices");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "primality test needs a connected graph");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& nbrs = g.neighbors(u);
    const size_t d = nbrs.size();
    if (d < 2) continue;
    // Connectivity of the "no common 4-cycle" relation on N(u).
    std::vector<char> reached(d, 0);
    std::vector<size_t> stack{0};
    reached[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      const size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < d; ++j) {
        if (reached[j] || ShareFourCycle(g, u, nbrs[i], nbrs[j])) continue;
        reached[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
    if (count == d) return {Primality::kPrime, u};
  }
  return {Primality::kUnknown, std::nullopt};
}

}  // namespace ksym
