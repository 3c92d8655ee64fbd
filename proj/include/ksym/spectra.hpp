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

#ifndef KSYM_SPECTRA_HPP_
#define KSYM_SPECTRA_HPP_

#include <vector>

#include "ksym/exact.hpp"
#include "ksym/graph.hpp"
#include "ksym/polynomial.hpp"

namespace ksym {

// L = D - A
IntMatrix LaplacianMatrix(const Graph& g);
IntPolynomial LaplacianCharpoly(const Graph& g);

// n - rank(L - lambda I)
int Multiplicity(const Graph& g, const Integer& lambda);

// Laplacian spectrum held exactly: the integer eigenvalues with their
// multiplicities plus the leftover factor of the characteristic polynomial,
// which has no integer roots.
struct Spectrum {
  int order = 0;
  std::vector<IntegerRoot> integer_eigenvalues;  // ascending
  IntPolynomial residual = IntPolynomial::Constant(1);

  bool integral() const { return residual.is_one(); }
  int multiplicity(const Integer& lambda) const;
  // Integer eigenvalues expanded with multiplicity, ascending.
  std::vector<Integer> IntegerValues() const;
  IntPolynomial Charpoly() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b);
};

Spectrum SpectrumFromCharpoly(const IntPolynomial& charpoly);
// Multiset of integers, any order.
Spectrum SpectrumFromValues(std::vector<Integer> values);
Spectrum ComputeSpectrum(const Graph& g);
bool IsLaplacianIntegral(const Graph& g);

// {0} together with n - lambda_i over the n-1 largest eigenvalues. Throws
// kNonIntegral for a spectrum with a residual factor.
Spectrum ComplementSpectrum(const Spectrum& s);

// Number of eigenvalues <= t, exact. Residual roots are counted with
// Descartes' rule on the Taylor-shifted residual, exact because Laplacian
// eigenvalues are real.
int CountEigenvaluesAtMost(const Spectrum& s, const Integer& t);

// Display helper: all eigenvalues as doubles, ascending.
std::vector<double> ApproximateEigenvalues(const Spectrum& s);

// Matrix-tree count: det of L with row and column 0 deleted.
Integer SpanningTrees(const Graph& g);

struct EquitablePartition {
  std::vector<std::vector<Vertex>> blocks;
  IntMatrix dmatrix;  // d(i, j) = |N(v) ∩ V_j| for any v in V_i
};

// Throws kNotPartition or kNotEquitable (naming the vertex and block).
EquitablePartition VerifyEquitable(const Graph& g, const std::vector<std::vector<Vertex>>& blocks);
EquitablePartition SingletonPartition(const Graph& g);
EquitablePartition OneBlockPartition(const Graph& g);

// b(i, j) = -d(i, j) off the diagonal, b(i, i) = sum_s d(i, s) - d(i, i).
IntMatrix DivisorMatrix(const EquitablePartition& p);

// True iff the square-free part of charpoly(L^pi) divides charpoly(L(G)),
// i.e. every divisor-matrix eigenvalue is a Laplacian eigenvalue.
bool DivisorContained(const Graph& g, const EquitablePartition& p);

}  // namespace ksym

#endif  // KSYM_SPECTRA_HPP_
