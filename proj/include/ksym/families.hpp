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

#ifndef KSYM_FAMILIES_HPP_
#define KSYM_FAMILIES_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ksym/graph.hpp"
#include "ksym/polynomial.hpp"
#include "ksym/spectra.hpp"
#include "ksym/symmetry.hpp"

namespace ksym {

// i -> i+1 mod n.
Permutation Rotation(int n);
// i -> i+step mod n.
Permutation RotationBy(int n, int step);

// K_n viewed as k-symmetric (k | n): vertex j*d + r goes to ((j+1)%k)*d + r
// with d = n/k, so the canonical base is the first block {0..d-1} and
// sigma^j of it is block j.
CyclicAction CliqueBlockAction(int n, int k);

// C(n, m): the empty graph on n apexes n-joined with m copies of K_n.
// Apexes are 0..n-1; copy c occupies n + c*n .. n + c*n + n-1, and apex i is
// adjacent to vertex i of every copy.
Graph BuildCnm(int n, int m);

// C(n, k, m), k | n: k apexes k-joined with m copies of K_n. Apex j is
// adjacent to the j-th block of d = n/k consecutive vertices of every copy.
Graph BuildCnkm(int n, int k, int m);

// Expanded closed forms
//  C(n,m):   x(x-1)^(m-1)(x-(n+1))^((m-1)(n-1))(x-(m+1))(x^2-(m+n+1)x+mn)^(n-1)
//  C(n,k,m): x(x-1)^(m-1)(x-(n+1))^(m(n-1)-k+1)(x-(md+1))(x^2-(md+n+1)x+mdn)^(k-1)
IntPolynomial ClosedCnmCharpoly(int n, int m);
IntPolynomial ClosedCnkmCharpoly(int n, int k, int m);

struct SymmetricPart {
  Graph graph;
  CyclicAction action;
};

struct JoinedFamily {
  Graph graph;
  CyclicAction action;
  Base base;
  std::vector<std::vector<Vertex>> blocks;  // vertex set of each input part
};

// G_1 v_k G_2 v_k ... v_k G_l, folded left to right with the canonical base
// of every part. All parts must share k.
JoinedFamily KJoinAll(const std::vector<SymmetricPart>& parts);

struct OrbitConstruction {
  Graph graph;
  CyclicAction action;
  // (V_0, V_1, ..., V_l): apexes first, then each part.
  EquitablePartition partition;
  int base_size = 0;  // sum of |V(G_i)| / k
};

// empty(k) v_k (G_1 u ... u G_l). Throws kOrderMismatch if a part's action
// does not have order k, and kNotEquitable if a part is not regular (the
// block partition is then not equitable).
OrbitConstruction BuildOrbitConstruction(int k, const std::vector<SymmetricPart>& parts);

// l connected regular parts cycling through K_k, C_2k (step 2), C_3k (step 3).
std::vector<SymmetricPart> StandardOrbitParts(int k, int l);

struct FamilyParams {
  int n = 1;  // clique size
  int k = 1;  // symmetry order
  int m = 1;  // copy count
  int d = 1;  // n / k

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// x^2 - (md+n+1)x + mdn has integer roots (or is absent because k = 1).
bool ClosedFormIntegral(int n, int k, int m);
// The two roots of the quadratic factor when it splits.
std::optional<std::pair<Integer, Integer>> QuadraticRoots(int n, int k, int m);

// (n, m) = (kl, (k+1)(l-1)); l >= 2.
FamilyParams IntegralParamsKL(int k, int l);
// n = m = k^2 + k.
FamilyParams RegularIntegralParam(int k);
// C(n,n,m) integral, d | n, d | m  =>  C(n, n/d, m/d) integral.
FamilyParams TransferDown(int n, int m, int d);
// C(n,k,m) integral, d = n/k  =>  C(n, n, md) integral.
FamilyParams TransferUp(int n, int k, int m);

// All (n, m) with n <= max_n, m <= max_m and C(n, m) Laplacian integral,
// lexicographic. The fast path checks the quadratic's discriminant; with
// brute_force every graph's spectrum is computed instead.
std::vector<std::pair<int, int>> SearchIntegralCnm(int max_n, int max_m, bool brute_force = false);

// Some induced P_4 (a, b, c, d) with path edges ab, bc, cd, or nullopt for a
// cograph.
std::optional<std::array<Vertex, 4>> CographWitness(const Graph& g);

}  // namespace ksym

#endif  // KSYM_FAMILIES_HPP_
