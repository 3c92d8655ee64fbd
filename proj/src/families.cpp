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

#include "ksym/families.hpp"

#include <string>

#include "ksym/error.hpp"

namespace ksym {

namespace {

void RequirePositive(int value, const char* name) {
  if (value < 1) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be at least 1");
  }
}

void RequireDivides(int k, int n) {
  RequirePositive(k, "k");
  if (n % k != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(k) + " does not divide " + std::to_string(n));
  }
}

// (x - r)^e
IntPolynomial LinearPower(long r, long e) {
  return IntPolynomial::Linear(r).Pow(static_cast<unsigned>(e));
}

// x^2 - b x + c
IntPolynomial Quadratic(const Integer& b, const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c, -b, 1});
}

}  // namespace

Permutation Rotation(int n) { return RotationBy(n, 1); }

Permutation RotationBy(int n, int step) {
  Permutation p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = (i + step) % n;
  return p;
}

CyclicAction CliqueBlockAction(int n, int k) {
  RequirePositive(n, "n");
  RequireDivides(k, n);
  const int d = n / k;
  Permutation p(static_cast<size_t>(n));
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < d; ++r) p[j * d + r] = ((j + 1) % k) * d + r;
  return VerifyKSymmetric(Complete(n), p, k);
}

Graph BuildCnm(int n, int m) { return BuildCnkm(n, n, m); }

Graph BuildCnkm(int n, int k, int m) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  RequireDivides(k, n);
  const int d = n / k;
  std::vector<Edge> edges;
  for (int c = 0; c < m; ++c) {
    const int offset = k + c * n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(offset + u, offset + v);
    for (int j = 0; j < k; ++j)
      for (int r = 0; r < d; ++r) edges.emplace_back(j, offset + j * d + r);
  }
  return Graph(k + m * n, edges);
}

IntPolynomial ClosedCnmCharpoly(int n, int m) { return ClosedCnkmCharpoly(n, n, m); }

IntPolynomial ClosedCnkmCharpoly(int n, int k, int m) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  RequireDivides(k, n);
  const long d = n / k;
  const long md = static_cast<long>(m) * d;
  return IntPolynomial::X() * LinearPower(1, m - 1) *
         LinearPower(n + 1, static_cast<long>(m) * (n - 1) - k + 1) * LinearPower(md + 1, 1) *
         Quadratic(md + n + 1, Integer(md) * n).Pow(static_cast<unsigned>(k - 1));
}

JoinedFamily KJoinAll(const std::vector<SymmetricPart>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one part");
  JoinedFamily acc{parts[0].graph, parts[0].action, BaseOf(parts[0].action), {}};
  std::vector<Vertex> first(static_cast<size_t>(parts[0].graph.order()));
  for (int v = 0; v < parts[0].graph.order(); ++v) first[v] = v;
  acc.blocks.push_back(std::move(first));
  for (size_t i = 1; i < parts.size(); ++i) {
    const int shift = acc.graph.order();
    JoinResult joined = KJoin(acc.graph, acc.action, acc.base, parts[i].graph, parts[i].action,
                              BaseOf(parts[i].action));
    std::vector<Vertex> block;
    for (int v = 0; v < parts[i].graph.order(); ++v) block.push_back(shift + v);
    acc.blocks.push_back(std::move(block));
    acc.graph = std::move(joined.graph);
    acc.action = std::move(joined.action);
    acc.base = std::move(joined.base);
  }
  return acc;
}

OrbitConstruction BuildOrbitConstruction(int k, const std::vector<SymmetricPart>& parts) {
  RequirePositive(k, "k");
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one part");
  for (const auto& part : parts) {
    if (part.action.k() != k) {
      throw Error(ErrorCode::kOrderMismatch, "part action has order " +
                                                 std::to_string(part.action.k()) +
                                                 ", expected " + std::to_string(k));
    }
  }
  Graph apexes = EmptyGraph(k);
  CyclicAction apex_action = VerifyKSymmetric(apexes, Rotation(k), k);

  Graph union_graph = parts[0].graph;
  CyclicAction union_action = parts[0].action;
  for (size_t i = 1; i < parts.size(); ++i) {
    union_action = UnionAction(union_graph, union_action, parts[i].graph, parts[i].action);
    union_graph = DisjointUnion(union_graph, parts[i].graph);
  }
  JoinResult joined =
      KJoin(apexes, apex_action, {0}, union_graph, union_action, BaseOf(union_action));

  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> apex_block;
  for (int v = 0; v < k; ++v) apex_block.push_back(v);
  blocks.push_back(std::move(apex_block));
  int offset = k;
  int base_size = 0;
  for (const auto& part : parts) {
    std::vector<Vertex> block;
    for (int v = 0; v < part.graph.order(); ++v) block.push_back(offset + v);
    offset += part.graph.order();
    base_size += part.graph.order() / k;
    blocks.push_back(std::move(block));
  }
  EquitablePartition partition = VerifyEquitable(joined.graph, blocks);
  return {std::move(joined.graph), std::move(joined.action), std::move(partition), base_size};
}

std::vector<SymmetricPart> StandardOrbitParts(int k, int l) {
  RequirePositive(k, "k");
  RequirePositive(l, "l");
  std::vector<SymmetricPart> options;
  options.push_back({Complete(k), VerifyKSymmetric(Complete(k), Rotation(k), k)});
  for (int step : {2, 3}) {
    if (step * k < 3) continue;
    const Graph cycle = Cycle(step * k);
    options.push_back({cycle, VerifyKSymmetric(cycle, RotationBy(step * k, step), k)});
  }
  std::vector<SymmetricPart> parts;
  for (int i = 0; i < l; ++i) parts.push_back(options[static_cast<size_t>(i) % options.size()]);
  return parts;
}

std::optional<std::pair<Integer, Integer>> QuadraticRoots(int n, int k, int m) {
  RequireDivides(k, n);
  const Integer md = Integer(m) * (n / k);
  const Integer b = md + n + 1;
  const Integer disc = b * b - 4 * md * n;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  // b and root have the same parity since disc = b^2 - 4(...).
  return std::make_pair(Integer((b - root) / 2), Integer((b + root) / 2));
}

bool ClosedFormIntegral(int n, int k, int m) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  RequireDivides(k, n);
  return k == 1 || QuadraticRoots(n, k, m).has_value();
}

FamilyParams IntegralParamsKL(int k, int l) {
  RequirePositive(k, "k");
  if (l < 2) throw Error(ErrorCode::kInvalidArgument, "l must be at least 2");
  const int n = k * l;
  return {n, n, (k + 1) * (l - 1), 1};
}

FamilyParams RegularIntegralParam(int k) {
  RequirePositive(k, "k");
  const int n = k * k + k;
  return {n, n, n, 1};
}

FamilyParams TransferDown(int n, int m, int d) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  RequirePositive(d, "d");
  if (n % d != 0 || m % d != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(d) + " must divide both n = " + std::to_string(n) +
                    " and m = " + std::to_string(m));
  }
  if (!ClosedFormIntegral(n, n, m)) {
    throw Error(ErrorCode::kNonIntegral, "source C(n,n,m) is not Laplacian integral");
  }
  return {n, n / d, m / d, d};
}

FamilyParams TransferUp(int n, int k, int m) {
  RequirePositive(n, "n");
  RequirePositive(m, "m");
  RequireDivides(k, n);
  if (!ClosedFormIntegral(n, k, m)) {
    throw Error(ErrorCode::kNonIntegral, "source C(n,k,m) is not Laplacian integral");
  }
  // With k = 1 the source has no quadratic factor, so its integrality says
  // nothing about the target's quadratic.
  if (!QuadraticRoots(n, k, m)) {
    throw Error(ErrorCode::kNonIntegral,
                "quadratic factor of C(n,k,m) does not split; transfer does not apply");
  }
  const int d = n / k;
  return {n, n, m * d, 1};
}

std::vector<std::pair<int, int>> SearchIntegralCnm(int max_n, int max_m, bool brute_force) {
  std::vector<std::pair<int, int>> found;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= max_m; ++m) {
      const bool integral =
          brute_force ? IsLaplacianIntegral(BuildCnm(n, m)) : ClosedFormIntegral(n, n, m);
      if (integral) found.emplace_back(n, m);
    }
  }
  return found;
}

std::optional<std::array<Vertex, 4>> CographWitness(const Graph& g) {
  for (auto [b, c] : g.edges()) {
    for (int orient = 0; orient < 2; ++orient) {
      const Vertex x = orient == 0 ? b : c;
      const Vertex y = orient == 0 ? c : b;
      for (Vertex a : g.neighbors(x)) {
        if (a == y || g.adjacent(a, y)) continue;
        for (Vertex d : g.neighbors(y)) {
          if (d == x || d == a || g.adjacent(d, x) || g.adjacent(a, d)) continue;
          return std::array<Vertex, 4>{a, x, y, d};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ksym
