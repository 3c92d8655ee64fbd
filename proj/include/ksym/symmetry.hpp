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

#ifndef KSYM_SYMMETRY_HPP_
#define KSYM_SYMMETRY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ksym/graph.hpp"

namespace ksym {

// Image sequence: sigma[v] is the image of v.
using Permutation = std::vector<Vertex>;

// Generator of a free Z_k action by automorphisms of some host graph. Only
// obtainable through VerifyKSymmetric (or operations that re-run it), so a
// held value is always valid for the graph it was checked against.
class CyclicAction {
 public:
  int k() const { return k_; }
  const Permutation& sigma() const { return sigma_; }
  int graph_order() const { return static_cast<int>(sigma_.size()); }
  // sigma^j(v) for any j >= 0.
  Vertex Apply(Vertex v, int j = 1) const;

  friend bool operator==(const CyclicAction& a, const CyclicAction& b) {
    return a.k_ == b.k_ && a.sigma_ == b.sigma_;
  }

 private:
  friend CyclicAction VerifyKSymmetric(const Graph& g, const Permutation& sigma, int k);
  CyclicAction(int k, Permutation sigma) : k_(k), sigma_(std::move(sigma)) {}

  int k_;
  Permutation sigma_;
};

// One representative per orbit, ascending.
using Base = std::vector<Vertex>;

bool IsPermutation(const Permutation& sigma, int n);
Permutation IdentityPermutation(int n);
// (a * b)(v) = a(b(v))
Permutation Compose(const Permutation& a, const Permutation& b);
Permutation PermutationPower(const Permutation& sigma, int e);
// Disjoint cycles; fixed points as singletons, each cycle starting at its
// least vertex.
std::vector<std::vector<Vertex>> Cycles(const Permutation& sigma);
// Builds an image array from cycles; unmentioned vertices are fixed.
Permutation FromCycles(const std::vector<std::vector<Vertex>>& cycles, int n);

// Throws Error(kInvalidArgument) if sigma is not a bijection of V(g).
bool IsAutomorphism(const Graph& g, const Permutation& sigma);

// Accepts sigma iff it is an automorphism of g of order exactly k whose
// cycles all have length k. Throws kNotAutomorphism, kNotFree or
// kOrderMismatch otherwise.
CyclicAction VerifyKSymmetric(const Graph& g, const Permutation& sigma, int k);

enum class SearchStatus { kFound, kNotFound, kBudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<CyclicAction> action;
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Backtracking search for a k-symmetric automorphism. Orbits are built one at
// a time from the least unassigned vertex; candidate images are tried in
// ascending order, pruned by degree, sorted neighbour-degree signature and
// adjacency consistency with all earlier assignments. Budget counts partial
// assignment expansions.
SearchResult FindKSymmetric(const Graph& g, int k,
                            std::uint64_t budget = kDefaultSearchBudget);

// Least vertex of each orbit, ascending.
Base BaseOf(const CyclicAction& a);
// Throws kInvalidBase unless base meets every orbit of a exactly once.
void ValidateBase(const CyclicAction& a, const Base& base);
// sigma^j(base)
std::vector<Vertex> ShiftBase(const CyclicAction& a, const Base& base, int j);

// sigma^(k/d) as a d-symmetric action of g; throws kInvalidArgument if d does
// not divide k.
CyclicAction PowerAction(const Graph& g, const CyclicAction& a, int d);

// a1 on the first block, a2 shifted onto the second, validated on
// DisjointUnion(g1, g2). Throws kOrderMismatch.
CyclicAction UnionAction(const Graph& g1, const CyclicAction& a1, const Graph& g2,
                         const CyclicAction& a2);

// (x, y) -> (sigma(x), y) on CartesianProduct(g, h), validated.
CyclicAction CartesianAction(const Graph& g, const CyclicAction& a, const Graph& h);

struct JoinResult {
  Graph graph;
  CyclicAction action;
  Base base;  // b1 followed by b2 shifted
};

// (g1, a1, b1) v_k (g2, a2, b2): the disjoint union plus, for each j in Z_k,
// every edge between sigma1^j(b1) and sigma2^j(b2).
JoinResult KJoin(const Graph& g1, const CyclicAction& a1, const Base& b1, const Graph& g2,
                 const CyclicAction& a2, const Base& b2);

enum class CycleHost { kGraph, kComplement };

struct HostCycle {
  CycleHost host;
  std::vector<Vertex> cycle;
};

// For an n-symmetric action on an n-vertex graph (n >= 3), the orbit of 0
// read in order is a Hamiltonian cycle of g or of its complement.
HostCycle HamiltonianFromAction(const Graph& g, const CyclicAction& a);

}  // namespace ksym

#endif  // KSYM_SYMMETRY_HPP_
