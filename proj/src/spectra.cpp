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

#include "ksym/spectra.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ksym/error.hpp"

namespace ksym {

IntMatrix LaplacianMatrix(const Graph& g) {
  const size_t n = static_cast<size_t>(g.order());
  IntMatrix l(n, n);
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    l(u, v) = -1;
    l(v, u) = -1;
  }
  return l;
}

IntPolynomial LaplacianCharpoly(const Graph& g) {
  return CharacteristicPolynomial(LaplacianMatrix(g));
}

int Multiplicity(const Graph& g, const Integer& lambda) {
  IntMatrix shifted = LaplacianMatrix(g);
  for (int v = 0; v < g.order(); ++v) shifted(v, v) -= lambda;
  return g.order() - static_cast<int>(Rank(shifted));
}

int Spectrum::multiplicity(const Integer& lambda) const {
  for (const auto& r : integer_eigenvalues)
    if (r.value == lambda) return r.multiplicity;
  return 0;
}

std::vector<Integer> Spectrum::IntegerValues() const {
  std::vector<Integer> values;
  for (const auto& r : integer_eigenvalues)
    for (int i = 0; i < r.multiplicity; ++i) values.push_back(r.value);
  return values;
}

IntPolynomial Spectrum::Charpoly() const { return Reconstruct({integer_eigenvalues, residual}); }

bool operator==(const Spectrum& a, const Spectrum& b) {
  if (a.order != b.order || !(a.residual == b.residual)) return false;
  if (a.integer_eigenvalues.size() != b.integer_eigenvalues.size()) return false;
  for (size_t i = 0; i < a.integer_eigenvalues.size(); ++i) {
    if (a.integer_eigenvalues[i].value != b.integer_eigenvalues[i].value ||
        a.integer_eigenvalues[i].multiplicity != b.integer_eigenvalues[i].multiplicity) {
      return false;
    }
  }
  return true;
}

Spectrum SpectrumFromCharpoly(const IntPolynomial& charpoly) {
  RootSplit split = IntegerRoots(charpoly);
  Spectrum s;
  s.order = charpoly.degree();
  s.integer_eigenvalues = std::move(split.roots);
  s.residual = std::move(split.residual);
  return s;
}

Spectrum SpectrumFromValues(std::vector<Integer> values) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.order = static_cast<int>(values.size());
  for (const auto& v : values) {
    if (!s.integer_eigenvalues.empty() && s.integer_eigenvalues.back().value == v) {
      ++s.integer_eigenvalues.back().multiplicity;
    } else {
      s.integer_eigenvalues.push_back({v, 1});
    }
  }
  return s;
}

Spectrum ComputeSpectrum(const Graph& g) { return SpectrumFromCharpoly(LaplacianCharpoly(g)); }

bool IsLaplacianIntegral(const Graph& g) { return ComputeSpectrum(g).integral(); }

Spectrum ComplementSpectrum(const Spectrum& s) {
  if (!s.integral()) {
    throw Error(ErrorCode::kNonIntegral, "complement spectrum needs an integral spectrum");
  }
  std::vector<Integer> values = s.IntegerValues();  // ascending, values[0] = 0
  std::vector<Integer> result{0};
  for (size_t i = 1; i < values.size(); ++i) result.push_back(s.order - values[i]);
  return SpectrumFromValues(std::move(result));
}

int CountEigenvaluesAtMost(const Spectrum& s, const Integer& t) {
  int count = 0;
  for (const auto& r : s.integer_eigenvalues)
    if (r.value <= t) count += r.multiplicity;
  if (s.residual.degree() >= 1) {
    count += s.residual.degree() - CountRootsAbove(s.residual, t);
  }
  return count;
}

std::vector<double> ApproximateEigenvalues(const Spectrum& s) {
  std::vector<double> values;
  for (const auto& v : s.IntegerValues()) values.push_back(v.get_d());
  // The residual may repeat irreducible factors; isolate on its square-free
  // part and restore multiplicities by division.
  IntPolynomial rest = s.residual;
  while (rest.degree() >= 1) {
    const IntPolynomial sf = SquarefreePart(rest);
    for (double r : ApproximateRealRoots(sf)) values.push_back(r);
    rest = DivideExact(rest, sf);
  }
  std::sort(values.begin(), values.end());
  return values;
}

Integer SpanningTrees(const Graph& g) {
  const IntMatrix l = LaplacianMatrix(g);
  const size_t n = l.rows();
  IntMatrix minor(n - 1, n - 1);
  for (size_t i = 1; i < n; ++i)
    for (size_t j = 1; j < n; ++j) minor(i - 1, j - 1) = l(i, j);
  return Determinant(minor);
}

EquitablePartition VerifyEquitable(const Graph& g,
                                   const std::vector<std::vector<Vertex>>& blocks) {
  const int n = g.order();
  std::vector<int> block_of(static_cast<size_t>(n), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::kNotPartition, "empty block");
    for (Vertex v : blocks[b]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kNotPartition, "vertex out of range: " + std::to_string(v));
      }
      if (block_of[v] != -1) {
        throw Error(ErrorCode::kNotPartition, "vertex in two blocks: " + std::to_string(v));
      }
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (block_of[v] == -1) {
      throw Error(ErrorCode::kNotPartition, "vertex not covered: " + std::to_string(v));
    }
  }
  const size_t k = blocks.size();
  IntMatrix d(k, k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t idx = 0; idx < blocks[i].size(); ++idx) {
      const Vertex v = blocks[i][idx];
      std::vector<long> counts(k, 0);
      for (Vertex w : g.neighbors(v)) ++counts[static_cast<size_t>(block_of[w])];
      for (size_t j = 0; j < k; ++j) {
        if (idx == 0) {
          d(i, j) = counts[j];
        } else if (d(i, j) != counts[j]) {
          throw Error(ErrorCode::kNotEquitable,
                      "vertex " + std::to_string(v) + " has " + std::to_string(counts[j]) +
                          " neighbours in block " + std::to_string(j) + ", expected " +
                          d(i, j).get_str());
        }
      }
    }
  }
  return {blocks, std::move(d)};
}

EquitablePartition SingletonPartition(const Graph& g) {
  std::vector<std::vector<Vertex>> blocks;
  for (int v = 0; v < g.order(); ++v) blocks.push_back({v});
  return VerifyEquitable(g, blocks);
}

EquitablePartition OneBlockPartition(const Graph& g) {
  std::vector<Vertex> all(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return VerifyEquitable(g, {all});
}

IntMatrix DivisorMatrix(const EquitablePartition& p) {
  const size_t k = p.dmatrix.rows();
  IntMatrix b(k, k);
  for (size_t i = 0; i < k; ++i) {
    Integer row = 0;
    for (size_t s = 0; s < k; ++s) row += p.dmatrix(i, s);
    for (size_t j = 0; j < k; ++j) b(i, j) = i == j ? Integer(row - p.dmatrix(i, i)) : Integer(-p.dmatrix(i, j));
  }
  return b;
}

bool DivisorContained(const Graph& g, const EquitablePartition& p) {
  const IntPolynomial quotient = SquarefreePart(CharacteristicPolynomial(DivisorMatrix(p)));
  return DivideByMonic(LaplacianCharpoly(g), quotient).remainder.is_zero();
}

}  // namespace ksym
