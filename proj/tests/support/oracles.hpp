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

// Slow, independent reference implementations used only by the tests.
// Nothing here calls the elimination, flow or search code under test.

#ifndef KSYM_TESTS_ORACLES_HPP_
#define KSYM_TESTS_ORACLES_HPP_

#include <optional>
#include <random>
#include <vector>

#include "ksym/exact.hpp"
#include "ksym/graph.hpp"
#include "ksym/polynomial.hpp"
#include "ksym/symmetry.hpp"

namespace ksym::oracle {

Integer CofactorDeterminant(const IntMatrix& m);
Rational CofactorDeterminant(const RatMatrix& m);

// det(xI - M) by Laplace expansion over polynomial entries.
IntPolynomial CofactorCharpoly(const IntMatrix& m);

// Largest r with a nonzero r x r minor.
size_t MinorRank(const IntMatrix& m);

// Laplacian built straight from the adjacency predicate.
IntMatrix NaiveLaplacian(const Graph& g);

bool Isomorphic(const Graph& a, const Graph& b);

// Smallest vertex set whose removal disconnects g; n-1 for complete graphs.
int CutConnectivity(const Graph& g);

bool HasCutVertex(const Graph& g);

// Tries every permutation; only for small orders.
std::optional<Permutation> ExhaustiveKSymmetric(const Graph& g, int k);

// Integer roots in [lo, hi] found by evaluation and repeated exact division.
std::vector<std::pair<Integer, int>> ScanIntegerRoots(IntPolynomial p, long lo, long hi);

// Spanning trees by deletion-contraction on a multigraph.
Integer DeletionContraction(const Graph& g);

bool HasInducedP4(const Graph& g);

IntMatrix RandomIntMatrix(std::mt19937_64& rng, size_t rows, size_t cols, int lo, int hi);
Graph RandomGraph(std::mt19937_64& rng, int n, double p);

}  // namespace ksym::oracle

#endif  // KSYM_TESTS_ORACLES_HPP_
