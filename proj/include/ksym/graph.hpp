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

#ifndef KSYM_GRAPH_HPP_
#define KSYM_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ksym {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  // Validates the edge list: no loops, no duplicates (in either
  // orientation), endpoints in range. Throws Error(kInvalidArgument).
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return order_; }
  size_t size() const { return edges_.size(); }
  // Sorted, normalized (u < v).
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<size_t>(u) * order_ + v] != 0;
  }
  std::vector<int> DegreeSequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<unsigned char> matrix_;
};

enum class GraphKind { kComplete, kEmpty, kCycle, kPath, kPetersen };

// K_n, the edgeless graph, C_n (n >= 3), P_n, or the Petersen graph (n = 10:
// outer cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5).
Graph Generate(GraphKind kind, int n);
Graph Complete(int n);
Graph EmptyGraph(int n);
Graph Cycle(int n);
Graph Path(int n);
Graph Petersen();

Graph Complement(const Graph& g);
// h's vertices are shifted by g.order().
Graph DisjointUnion(const Graph& g, const Graph& h);
// m disjoint copies of g.
Graph Copies(const Graph& g, int m);
// Vertex (a, b) is numbered a * h.order() + b.
Graph CartesianProduct(const Graph& g, const Graph& h);
// Disjoint union plus every edge between the two sides.
Graph Join(const Graph& g, const Graph& h);
// Subgraph induced on the given vertices, renumbered in the given order.
Graph InducedSubgraph(const Graph& g, const std::vector<Vertex>& vertices);
// Image of g under the relabeling v -> perm[v].
Graph Relabel(const Graph& g, const std::vector<Vertex>& perm);

struct GraphMetrics {
  int pendants = 0;        // degree-1 vertices
  int quasi_pendants = 0;  // vertices adjacent to some pendant
  int connectivity = 0;    // vertex connectivity; n-1 for K_n
  int min_degree = 0;
  bool two_connected = false;
  int components = 0;
};

int ComponentCount(const Graph& g);
bool IsConnected(const Graph& g);
std::vector<Vertex> ArticulationPoints(const Graph& g);
// Exact vertex connectivity via unit-capacity max flow on the split graph,
// minimized over non-adjacent pairs.
int VertexConnectivity(const Graph& g);
GraphMetrics Metrics(const Graph& g);

// min{ kappa(G)|H|, kappa(H)|G|, delta(G box H) }; throws kDisconnected.
int SpacapanConnectivity(const Graph& g, const Graph& h);

enum class Primality { kPrime, kUnknown };

struct PrimalityVerdict {
  Primality verdict = Primality::kUnknown;
  std::optional<Vertex> witness;
};

// One-sided Cartesian primality test. In a nontrivial product, any two edges
// at a vertex that come from different factors lie on a common 4-cycle.
// So if at some vertex u the graph on N(u) joining a, b whenever u-a and u-b
// share no 4-cycle is connected, the edges at u cannot be split into factor
// classes and G is prime. Throws kDisconnected; needs order >= 2.
PrimalityVerdict PrimalityWitness(const Graph& g);

// True iff edges u-a and u-b lie on a common 4-cycle.
bool ShareFourCycle(const Graph& g, Vertex u, Vertex a, Vertex b);

}  // namespace ksym

#endif  // KSYM_GRAPH_HPP_
