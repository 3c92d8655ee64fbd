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

#include "ksym/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ksym/error.hpp"

namespace ksym {

Vertex CyclicAction::Apply(Vertex v, int j) const {
  for (int i = 0; i < j % k_; ++i) v = sigma_[v];
  return v;
}

bool IsPermutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (Vertex v : sigma) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Permutation IdentityPermutation(int n) {
  Permutation p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (size_t v = 0; v < b.size(); ++v) c[v] = a[b[v]];
  return c;
}

Permutation PermutationPower(const Permutation& sigma, int e) {
  Permutation result = IdentityPermutation(static_cast<int>(sigma.size()));
  for (int i = 0; i < e; ++i) result = Compose(sigma, result);
  return result;
}

std::vector<std::vector<Vertex>> Cycles(const Permutation& sigma) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<char> seen(sigma.size(), 0);
  for (size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = static_cast<Vertex>(s); !seen[v]; v = sigma[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Permutation FromCycles(const std::vector<std::vector<Vertex>>& cycles, int n) {
  Permutation p = IdentityPermutation(n);
  std::vector<char> mentioned(static_cast<size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      const Vertex v = cycle[i];
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kInvalidArgument, "cycle vertex out of range: " + std::to_string(v));
      }
      if (mentioned[v]) {
        throw Error(ErrorCode::kInvalidArgument, "vertex repeated in cycles: " + std::to_string(v));
      }
      mentioned[v] = 1;
      p[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool IsAutomorphism(const Graph& g, const Permutation& sigma) {
  if (!IsPermutation(sigma, g.order())) {
    throw Error(ErrorCode::kInvalidArgument, "permutation must be a bijection of the vertex set");
  }
  // A bijection mapping every edge to an edge is an automorphism of a finite
  // graph; the reverse direction follows from equal edge counts.
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(sigma[u], sigma[v])) return false;
  }
  return true;
}

CyclicAction VerifyKSymmetric(const Graph& g, const Permutation& sigma, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (!IsAutomorphism(g, sigma)) {
    throw Error(ErrorCode::kNotAutomorphism, "permutation is not an automorphism");
  }
  if (g.order() % k != 0) {
    throw Error(ErrorCode::kNotFree, std::to_string(k) + " does not divide the order " +
                                         std::to_string(g.order()) + "; no free action exists");
  }
  const auto cycles = Cycles(sigma);
  const size_t length = cycles.front().size();
  for (const auto& cycle : cycles) {
    if (cycle.size() != length) {
      throw Error(ErrorCode::kNotFree, "cycles of different lengths; the action is not free");
    }
  }
  if (static_cast<int>(length) != k) {
    throw Error(ErrorCode::kOrderMismatch, "permutation has order " + std::to_string(length) +
                                               ", expected " + std::to_string(k));
  }
  return CyclicAction(k, sigma);
}

namespace {

class SymmetrySearch {
 public:
  SymmetrySearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g),
        k_(k),
        budget_(budget),
        sigma_(static_cast<size_t>(g.order()), -1),
        in_orbit_(static_cast<size_t>(g.order()), 0) {
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> sig;
      for (Vertex w : g.neighbors(v)) sig.push_back(g.degree(w));
      std::sort(sig.begin(), sig.end());
      signature_.push_back(std::move(sig));
    }
  }

  SearchResult Run() {
    SearchResult result;
    if (g_.order() % k_ != 0) return result;
    StartOrbit();
    result.expansions = expansions_;
    if (found_) {
      result.status = SearchStatus::kFound;
      result.action = VerifyKSymmetric(g_, sigma_, k_);
    } else if (exhausted_) {
      result.status = SearchStatus::kBudgetExhausted;
    }
    return result;
  }

 private:
  bool Consistent(Vertex x, Vertex y) const {
    if (g_.degree(x) != g_.degree(y) || signature_[x] != signature_[y]) return false;
    for (auto [xp, yp] : assigned_) {
      if (g_.adjacent(x, xp) != g_.adjacent(y, yp)) return false;
    }
    return true;
  }

  // Returns true when the search should stop (found or out of budget).
  bool StartOrbit() {
    if (static_cast<int>(assigned_.size()) == g_.order()) {
      found_ = true;
      return true;
    }
    Vertex start = 0;
    while (in_orbit_[start]) ++start;
    in_orbit_[start] = 1;
    const bool stop = Extend(start, start, 1);
    if (!stop) in_orbit_[start] = 0;
    return stop;
  }

  bool Extend(Vertex start, Vertex current, int length) {
    if (length == k_) {
      if (++expansions_ > budget_) return exhausted_ = true;
      if (!Consistent(current, start)) return false;
      Assign(current, start);
      if (StartOrbit()) return true;
      Unassign(current);
      return false;
    }
    for (Vertex w = 0; w < g_.order(); ++w) {
      if (in_orbit_[w]) continue;
      if (++expansions_ > budget_) return exhausted_ = true;
      if (!Consistent(current, w)) continue;
      in_orbit_[w] = 1;
      Assign(current, w);
      if (Extend(start, w, length + 1)) return true;
      Unassign(current);
      in_orbit_[w] = 0;
    }
    return false;
  }

  void Assign(Vertex x, Vertex y) {
    sigma_[x] = y;
    assigned_.emplace_back(x, y);
  }
  void Unassign(Vertex x) {
    sigma_[x] = -1;
    assigned_.pop_back();
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool found_ = false;
  bool exhausted_ = false;
  Permutation sigma_;
  std::vector<char> in_orbit_;
  std::vector<std::vector<int>> signature_;
  std::vector<std::pair<Vertex, Vertex>> assigned_;
};

}  // namespace

SearchResult FindKSymmetric(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  return SymmetrySearch(g, k, budget).Run();
}

Base BaseOf(const CyclicAction& a) {
  Base base;
  for (const auto& cycle : Cycles(a.sigma())) base.push_back(cycle.front());
  std::sort(base.begin(), base.end());
  return base;
}

void ValidateBase(const CyclicAction& a, const Base& base) {
  const int n = a.graph_order();
  if (static_cast<int>(base.size()) * a.k() != n) {
    throw Error(ErrorCode::kInvalidBase, "base size must be n/k = " + std::to_string(n / a.k()));
  }
  std::vector<char> covered(static_cast<size_t>(n), 0);
  for (Vertex b : base) {
    if (b < 0 || b >= n) throw Error(ErrorCode::kInvalidBase, "base vertex out of range");
    for (int j = 0; j < a.k(); ++j) {
      const Vertex v = a.Apply(b, j);
      if (covered[v]) throw Error(ErrorCode::kInvalidBase, "base meets an orbit twice");
      covered[v] = 1;
    }
  }
}

std::vector<Vertex> ShiftBase(const CyclicAction& a, const Base& base, int j) {
  std::vector<Vertex> shifted;
  shifted.reserve(base.size());
  for (Vertex b : base) shifted.push_back(a.Apply(b, j));
  return shifted;
}

CyclicAction PowerAction(const Graph& g, const CyclicAction& a, int d) {
  if (d < 1 || a.k() % d != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(d) + " does not divide k = " + std::to_string(a.k()));
  }
  return VerifyKSymmetric(g, PermutationPower(a.sigma(), a.k() / d), d);
}

namespace {

Permutation ConcatenatePermutations(const Permutation& p1, const Permutation& p2) {
  Permutation p = p1;
  const int shift = static_cast<int>(p1.size());
  for (Vertex v : p2) p.push_back(v + shift);
  return p;
}

void RequireHost(const Graph& g, const CyclicAction& a) {
  if (g.order() != a.graph_order()) {
    throw Error(ErrorCode::kInvalidArgument, "action acts on a graph of a different order");
  }
}

}  // namespace

CyclicAction UnionAction(const Graph& g1, const CyclicAction& a1, const Graph& g2,
                         const CyclicAction& a2) {
  RequireHost(g1, a1);
  RequireHost(g2, a2);
  if (a1.k() != a2.k()) {
    throw Error(ErrorCode::kOrderMismatch, "actions have different orders " +
                                               std::to_string(a1.k()) + " and " +
                                               std::to_string(a2.k()));
  }
  return VerifyKSymmetric(DisjointUnion(g1, g2), ConcatenatePermutations(a1.sigma(), a2.sigma()),
                          a1.k());
}

CyclicAction CartesianAction(const Graph& g, const CyclicAction& a, const Graph& h) {
  RequireHost(g, a);
  const int nh = h.order();
  Permutation p(static_cast<size_t>(g.order() * nh));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < nh; ++y) p[x * nh + y] = a.sigma()[x] * nh + y;
  return VerifyKSymmetric(CartesianProduct(g, h), p, a.k());
}

JoinResult KJoin(const Graph& g1, const CyclicAction& a1, const Base& b1, const Graph& g2,
                 const CyclicAction& a2, const Base& b2) {
  RequireHost(g1, a1);
  RequireHost(g2, a2);
  if (a1.k() != a2.k()) {
    throw Error(ErrorCode::kOrderMismatch, "k-symmetric join needs equal orders, got " +
                                               std::to_string(a1.k()) + " and " +
                                               std::to_string(a2.k()));
  }
  ValidateBase(a1, b1);
  ValidateBase(a2, b2);
  const int k = a1.k();
  const int shift = g1.order();
  std::vector<Edge> edges = DisjointUnion(g1, g2).edges();
  for (int j = 0; j < k; ++j) {
    for (Vertex u : ShiftBase(a1, b1, j))
      for (Vertex v : ShiftBase(a2, b2, j)) edges.emplace_back(u, v + shift);
  }
  Graph joined(g1.order() + g2.order(), edges);
  CyclicAction action =
      VerifyKSymmetric(joined, ConcatenatePermutations(a1.sigma(), a2.sigma()), k);
  Base base = b1;
  for (Vertex v : b2) base.push_back(v + shift);
  return {std::move(joined), std::move(action), std::move(base)};
}

HostCycle HamiltonianFromAction(const Graph& g, const CyclicAction& a) {
  RequireHost(g, a);
  const int n = g.order();
  if (a.k() != n || n < 3) {
    throw Error(ErrorCode::kOrderMismatch, "action must be n-symmetric with n >= 3");
  }
  HostCycle result;
  result.host = g.adjacent(0, a.sigma()[0]) ? CycleHost::kGraph : CycleHost::kComplement;
  Vertex v = 0;
  for (int i = 0; i < n; ++i) {
    result.cycle.push_back(v);
    v = a.sigma()[v];
  }
  return result;
}

}  // namespace ksym
