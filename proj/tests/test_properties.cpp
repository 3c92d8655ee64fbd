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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ksym/catalog.hpp"
#include "ksym/exact.hpp"
#include "ksym/graph.hpp"
#include "ksym/polynomial.hpp"
#include "ksym/spectra.hpp"
#include "ksym/symmetry.hpp"
#include "support/error_code.hpp"
#include "support/oracles.hpp"

namespace ksym {
namespace {

Rational RandomRational(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// v -> (v + l) mod kl on blocks of size l, closed under the rotation, then
// relabelled at random.
std::pair<Graph, Permutation> RandomKSymmetric(std::mt19937_64& rng, int k, int l) {
  const int n = k * l;
  Permutation rot(n);
  for (int v = 0; v < n; ++v) rot[v] = (v + l) % n;
  std::bernoulli_distribution coin(0.3);
  std::set<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      int a = u, b = v;
      for (int j = 0; j < k; ++j) {
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
        a = rot[a];
        b = rot[b];
      }
    }
  }
  const Graph g(n, {edges.begin(), edges.end()});
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Permutation sigma(n);
  for (int v = 0; v < n; ++v) sigma[perm[v]] = perm[rot[v]];
  return {Relabel(g, perm), sigma};
}

TEST_CASE("bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const size_t n = 1 + i % 5;
    const IntMatrix m = oracle::RandomIntMatrix(rng, n, n, -9, 9);
    CAPTURE(ToString(m));
    CHECK(Determinant(m) == oracle::CofactorDeterminant(m));
  }
}

TEST_CASE("charpoly evaluates to det(tI - M)") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> pick(-20, 20);
  for (int i = 0; i < 40; ++i) {
    const size_t n = 1 + i % 6;
    const IntMatrix m = oracle::RandomIntMatrix(rng, n, n, -5, 5);
    const IntPolynomial p = CharacteristicPolynomial(m);
    CHECK(p.is_monic());
    CHECK(p.degree() == static_cast<int>(n));
    for (int s = 0; s < 3; ++s) {
      const Integer t = pick(rng);
      IntMatrix shifted = m;
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? t : Integer(0)) - m(r, c);
      CHECK(p.Evaluate(t) == Determinant(shifted));
    }
  }
}

TEST_CASE("kronecker product identities") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<size_t> dim(1, 3);
  for (int i = 0; i < 30; ++i) {
    const size_t m = dim(rng), n = dim(rng), p = dim(rng), q = dim(rng), r = dim(rng);
    const IntMatrix a = oracle::RandomIntMatrix(rng, m, n, -4, 4);
    const IntMatrix b = oracle::RandomIntMatrix(rng, p, q, -4, 4);
    const IntMatrix c = oracle::RandomIntMatrix(rng, p, q, -4, 4);
    CHECK(Kron(a, b + c) == Kron(a, b) + Kron(a, c));
    CHECK(Kron(b + c, a) == Kron(b, a) + Kron(c, a));

    const IntMatrix c2 = oracle::RandomIntMatrix(rng, n, r, -4, 4);
    const IntMatrix d2 = oracle::RandomIntMatrix(rng, q, r, -4, 4);
    CHECK(Kron(a, b) * Kron(c2, d2) == Kron(a * c2, b * d2));

    const IntMatrix sa = oracle::RandomIntMatrix(rng, m, m, -4, 4);
    const IntMatrix sb = oracle::RandomIntMatrix(rng, p, p, -4, 4);
    const Integer da = Determinant(sa), db = Determinant(sb);
    Integer expected = 1;
    for (size_t j = 0; j < p; ++j) expected *= da;
    for (size_t j = 0; j < m; ++j) expected *= db;
    CHECK(Determinant(Kron(sa, sb)) == expected);
    if (da != 0 && db != 0) {
      const RatMatrix ra = ToRational(sa), rb = ToRational(sb);
      CHECK(Inverse(Kron(ra, rb)) == Kron(Inverse(ra), Inverse(rb)));
    }
  }
}

TEST_CASE("aI + bJ inverse") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<size_t> dim(1, 6);
  int checked = 0;
  while (checked < 20) {
    const Rational a = RandomRational(rng, -6, 6), b = RandomRational(rng, -6, 6);
    const size_t n = dim(rng);
    if (a == 0 || a + Rational(static_cast<long>(n)) * b == 0) {
      CHECK(CodeOf([&] { AibjInverse(a, b, n); }) == ErrorCode::kSingular);
      continue;
    }
    CHECK(AibjInverse(a, b, n) * AibjMatrix(a, b, n) == ToRational(Identity(n)));
    CHECK(AibjDeterminant(a, b, n) == Determinant(AibjMatrix(a, b, n)));
    ++checked;
  }
}

TEST_CASE("toeplitz inverse is always verified") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const size_t n = 1 + i % 5;
    // Small entries so singular instances turn up too.
    std::vector<Rational> first(n), diagonals(2 * n - 1);
    for (auto& x : first) x = RandomRational(rng, -5, 5);
    for (auto& x : diagonals) x = RandomRational(rng, -5, 5);
    for (const ToeplitzSpec& t : {ToeplitzSpec::Symmetric(first), ToeplitzSpec(n, diagonals)}) {
      const RatMatrix m = t.ToMatrix();
      if (Determinant(m) == 0) {
        CHECK(CodeOf([&] { ToeplitzInverse(t); }) == ErrorCode::kUnsolvable);
      } else {
        CHECK(m * ToeplitzInverse(t) == ToRational(Identity(n)));
      }
    }
  }
}

TEST_CASE("integer root reconstruction") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> root(-6, 6), count(0, 4);
  for (int i = 0; i < 50; ++i) {
    IntPolynomial p = IntPolynomial::Constant(1);
    for (int j = count(rng); j > 0; --j) p = p * IntPolynomial::Linear(root(rng));
    // x^2 + c with c > 0 has no real roots.
    p = p * IntPolynomial({Integer(1 + i % 3), Integer(0), Integer(1)});
    const RootSplit split = IntegerRoots(p);
    CHECK(Reconstruct(split) == p);
    CHECK(split.residual.degree() == 2);
    CHECK(split.roots.size() == oracle::ScanIntegerRoots(p, -10, 10).size());
  }
}

TEST_CASE("handshake and complement on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 10;
    const Graph g = oracle::RandomGraph(rng, n, 0.4);
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * static_cast<int>(g.size()));
    CHECK(Complement(Complement(g)) == g);
    CHECK(g.size() + Complement(g).size() == static_cast<size_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("connectivity bounds on random connected graphs") {
  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 50) {
    const Graph g = oracle::RandomGraph(rng, 2 + tested % 9, 0.5);
    if (!IsConnected(g)) continue;
    const GraphMetrics m = Metrics(g);
    CHECK(m.connectivity <= m.min_degree);
    CHECK(m.connectivity == oracle::CutConnectivity(g));
    CHECK(m.two_connected == (g.order() >= 3 && !oracle::HasCutVertex(g)));
    CHECK(m.two_connected == (g.order() >= 3 && ArticulationPoints(g).empty()));
    ++tested;
  }
}

TEST_CASE("validated actions") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const int k = 1 + i % 4, l = 1 + i % 3;
    const auto [g, sigma] = RandomKSymmetric(rng, k, l);
    const CyclicAction a = VerifyKSymmetric(g, sigma, k);
    CHECK(Cycles(sigma).size() == static_cast<size_t>(l));
    CHECK(PermutationPower(sigma, k) == IdentityPermutation(g.order()));
    for (int j = 1; j < k; ++j) CHECK(PermutationPower(sigma, j) != IdentityPermutation(g.order()));
    const Base base = BaseOf(a);
    CHECK(base.size() == static_cast<size_t>(l));
    std::set<Vertex> covered;
    for (int j = 0; j < k; ++j)
      for (Vertex v : ShiftBase(a, base, j)) covered.insert(v);
    CHECK(covered.size() == static_cast<size_t>(g.order()));
  }
}

TEST_CASE("no k-symmetric action when k does not divide n") {
  for (const auto& [name, g] : Catalog()) {
    for (int k = 2; k <= g.order() + 1; ++k) {
      if (g.order() % k == 0) continue;
      CAPTURE(name);
      CAPTURE(k);
      CHECK(FindKSymmetric(g, k).status == SearchStatus::kNotFound);
    }
  }
}

TEST_CASE("derived actions re-validate") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    const int k = 2 + i % 3;
    const auto [g1, s1] = RandomKSymmetric(rng, k, 1 + i % 2);
    const auto [g2, s2] = RandomKSymmetric(rng, k, 1 + (i / 2) % 2);
    const CyclicAction a1 = VerifyKSymmetric(g1, s1, k);
    const CyclicAction a2 = VerifyKSymmetric(g2, s2, k);
    const CyclicAction u = UnionAction(g1, a1, g2, a2);
    CHECK(VerifyKSymmetric(DisjointUnion(g1, g2), u.sigma(), k) == u);
    const Graph h = Path(1 + i % 3);
    const CyclicAction c = CartesianAction(g1, a1, h);
    CHECK(VerifyKSymmetric(CartesianProduct(g1, h), c.sigma(), k) == c);
    if (k == 4) {
      const CyclicAction p = PowerAction(g1, a1, 2);
      CHECK(p.k() == 2);
      CHECK(VerifyKSymmetric(g1, p.sigma(), 2) == p);
    }
  }
}

TEST_CASE("k-join edge count") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const int k = 1 + i % 4;
    const auto [g1, s1] = RandomKSymmetric(rng, k, 1 + i % 3);
    const auto [g2, s2] = RandomKSymmetric(rng, k, 1 + (i / 3) % 3);
    const CyclicAction a1 = VerifyKSymmetric(g1, s1, k);
    const CyclicAction a2 = VerifyKSymmetric(g2, s2, k);
    const Base b1 = BaseOf(a1), b2 = BaseOf(a2);
    const JoinResult r = KJoin(g1, a1, b1, g2, a2, b2);
    CHECK(r.graph.size() == g1.size() + g2.size() + k * b1.size() * b2.size());
    CHECK(VerifyKSymmetric(r.graph, r.action.sigma(), k) == r.action);
  }
}

TEST_CASE("multiplicity by rank matches the charpoly") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::RandomGraph(rng, 2 + i % 7, 0.5);
    const RootSplit split = IntegerRoots(LaplacianCharpoly(g));
    for (const auto& r : split.roots) CHECK(Multiplicity(g, r.value) == r.multiplicity);
  }
}

}  // namespace
}  // namespace ksym
