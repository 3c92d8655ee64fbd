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

#include "ksym/exact.hpp"

#include <utility>

namespace ksym {

namespace {

void RequireSquare(size_t rows, size_t cols, const char* what) {
  if (rows != cols) {
    throw Error(ErrorCode::kNotSquare, std::string(what) + " needs a square matrix");
  }
}

}  // namespace

IntMatrix Special(SpecialKind kind, size_t n) {
  switch (kind) {
    case SpecialKind::kIdentity: {
      IntMatrix m(n, n);
      for (size_t i = 0; i < n; ++i) m(i, i) = 1;
      return m;
    }
    case SpecialKind::kAllOnes:
      return IntMatrix(n, n, std::vector<Integer>(n * n, Integer(1)));
    case SpecialKind::kOnesVector:
      return IntMatrix(n, 1, std::vector<Integer>(n, Integer(1)));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown special matrix kind");
}

IntMatrix Identity(size_t n) { return Special(SpecialKind::kIdentity, n); }
IntMatrix AllOnes(size_t n) { return Special(SpecialKind::kAllOnes, n); }
IntMatrix OnesVector(size_t n) { return Special(SpecialKind::kOnesVector, n); }

RatMatrix ToRational(const IntMatrix& m) {
  std::vector<Rational> data(m.data().begin(), m.data().end());
  return RatMatrix(m.rows(), m.cols(), std::move(data));
}

Integer Determinant(const IntMatrix& m) {
  RequireSquare(m.rows(), m.cols(), "determinant");
  const size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational Determinant(const RatMatrix& m) {
  RequireSquare(m.rows(), m.cols(), "determinant");
  const size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    det *= a(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / a(k, k);
      for (size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

size_t Rank(const IntMatrix& m) {
  IntMatrix a = m;
  const size_t rows = a.rows();
  const size_t cols = a.cols();
  Integer previous = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (size_t j = c; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Integer v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    ++r;
  }
  return r;
}

IntPolynomial CharacteristicPolynomial(const IntMatrix& m) {
  RequireSquare(m.rows(), m.cols(), "characteristic polynomial");
  const size_t n = m.rows();
  // values[t] = det(tI - M)
  std::vector<Integer> diffs(n + 1);
  for (size_t t = 0; t <= n; ++t) {
    IntMatrix shifted = Integer(-1) * m;
    for (size_t i = 0; i < n; ++i) shifted(i, i) += static_cast<unsigned long>(t);
    diffs[t] = Determinant(shifted);
  }
  // Forward differences in place: diffs[k] becomes Δ^k p(0).
  for (size_t k = 1; k <= n; ++k) {
    for (size_t t = n; t >= k; --t) diffs[t] -= diffs[t - 1];
  }
  // p(x) = sum_k (Δ^k p(0) / k!) x(x-1)...(x-k+1)
  IntPolynomial result;
  IntPolynomial falling = IntPolynomial::Constant(1);
  Integer factorial = 1;
  for (size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      falling = falling * IntPolynomial::Linear(static_cast<unsigned long>(k - 1));
      factorial *= static_cast<unsigned long>(k);
    }
    if (!mpz_divisible_p(diffs[k].get_mpz_t(), factorial.get_mpz_t())) {
      throw Error(ErrorCode::kInexactDivision, "interpolated coefficient is not integral");
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), diffs[k].get_mpz_t(), factorial.get_mpz_t());
    result = result + c * falling;
  }
  return result;
}

RatMatrix Inverse(const RatMatrix& m) {
  RequireSquare(m.rows(), m.cols(), "inverse");
  const size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = ToRational(Identity(n));
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kSingular, "matrix is singular");
    if (pivot != k) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Rational scale = 1 / a(k, k);
    for (size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      for (size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> Solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length mismatch");
  }
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  RatMatrix a(rows, cols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
    a(i, cols) = rhs[i];
  }
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    for (size_t j = 0; j <= cols; ++j) std::swap(a(r, j), a(pivot, j));
    const Rational scale = 1 / a(r, c);
    for (size_t j = 0; j <= cols; ++j) a(r, j) *= scale;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (size_t j = 0; j <= cols; ++j) a(i, j) -= factor * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i) {
    if (a(i, cols) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a(i, cols);
  return x;
}

RatMatrix AssembleBlocks(const RatMatrix& a11, const RatMatrix& a12, const RatMatrix& a21,
                         const RatMatrix& a22) {
  if (a11.rows() != a12.rows() || a21.rows() != a22.rows() || a11.cols() != a21.cols() ||
      a12.cols() != a22.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "blocks are not conformal");
  }
  const size_t top = a11.rows();
  const size_t left = a11.cols();
  RatMatrix a(top + a21.rows(), left + a12.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) {
      if (i < top) {
        a(i, j) = j < left ? a11(i, j) : a12(i, j - left);
      } else {
        a(i, j) = j < left ? a21(i - top, j) : a22(i - top, j - left);
      }
    }
  }
  return a;
}

Rational SchurDeterminant(const RatMatrix& a11, const RatMatrix& a12, const RatMatrix& a21,
                          const RatMatrix& a22) {
  RequireSquare(a11.rows(), a11.cols(), "Schur complement");
  RequireSquare(a22.rows(), a22.cols(), "Schur complement");
  if (a12.rows() != a11.rows() || a12.cols() != a22.cols() || a21.rows() != a22.rows() ||
      a21.cols() != a11.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "blocks are not conformal");
  }
  const RatMatrix inv22 = Inverse(a22);
  return Determinant(a22) * Determinant(a11 - a12 * inv22 * a21);
}

RatMatrix AibjMatrix(const Rational& a, const Rational& b, size_t n) {
  RatMatrix m(n, n, std::vector<Rational>(n * n, b));
  for (size_t i = 0; i < n; ++i) m(i, i) += a;
  return m;
}

Rational AibjDeterminant(const Rational& a, const Rational& b, size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  Rational power = 1;
  for (size_t i = 0; i + 1 < n; ++i) power *= a;
  return power * (a + Rational(static_cast<unsigned long>(n)) * b);
}

RatMatrix AibjInverse(const Rational& a, const Rational& b, size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  const Rational s = a + Rational(static_cast<unsigned long>(n)) * b;
  if (a == 0 || s == 0) {
    throw Error(ErrorCode::kSingular, "aI + bJ is singular (a = 0 or a + nb = 0)");
  }
  const Rational scale = 1 / (a * s);
  RatMatrix inv(n, n, std::vector<Rational>(n * n, Rational(-b * scale)));
  for (size_t i = 0; i < n; ++i) inv(i, i) += s * scale;
  return inv;
}

ToeplitzSpec::ToeplitzSpec(size_t n, std::vector<Rational> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  if (n_ == 0 || diagonals_.size() != 2 * n_ - 1) {
    throw Error(ErrorCode::kInvalidArgument, "Toeplitz spec needs 2n-1 diagonals, n >= 1");
  }
}

ToeplitzSpec ToeplitzSpec::FromMatrix(const RatMatrix& m) {
  RequireSquare(m.rows(), m.cols(), "Toeplitz");
  const size_t n = m.rows();
  std::vector<Rational> diag(n == 0 ? 0 : 2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const size_t idx = i + n - 1 - j;
      if (i == 0 || j == 0) {
        diag[idx] = m(i, j);
      } else if (m(i, j) != diag[idx]) {
        throw Error(ErrorCode::kInvalidArgument, "matrix is not Toeplitz");
      }
    }
  }
  return ToeplitzSpec(n, std::move(diag));
}

ToeplitzSpec ToeplitzSpec::Symmetric(std::vector<Rational> first_column) {
  const size_t n = first_column.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty Toeplitz column");
  std::vector<Rational> diag(2 * n - 1);
  for (size_t d = 0; d < n; ++d) {
    diag[n - 1 + d] = first_column[d];
    diag[n - 1 - d] = first_column[d];
  }
  return ToeplitzSpec(n, std::move(diag));
}

const Rational& ToeplitzSpec::a(long d) const {
  return diagonals_[static_cast<size_t>(d + static_cast<long>(n_) - 1)];
}

RatMatrix ToeplitzSpec::ToMatrix() const {
  RatMatrix m(n_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) m(i, j) = a(static_cast<long>(i) - static_cast<long>(j));
  return m;
}

std::vector<Rational> ToeplitzRhs(const ToeplitzSpec& t, ToeplitzReading reading) {
  const long n = static_cast<long>(t.size());
  std::vector<Rational> f(t.size());
  // 1-based entry i = 2..n
  for (long i = 2; i <= n; ++i) {
    if (reading == ToeplitzReading::kLiteral) {
      f[static_cast<size_t>(i - 1)] = t.a(n + 1 - i) - t.a(-(i - 1));
    } else {
      f[static_cast<size_t>(i - 1)] = t.a(-(n + 1 - i)) - t.a(i - 1);
    }
  }
  return f;
}

RatMatrix ToeplitzInverse(const ToeplitzSpec& t, ToeplitzReading reading) {
  const size_t n = t.size();
  const RatMatrix tm = t.ToMatrix();
  std::vector<Rational> e1(n);
  e1[0] = 1;
  auto x = Solve(tm, ToeplitzRhs(t, reading));
  auto y = Solve(tm, e1);
  if (!x || !y) {
    throw Error(ErrorCode::kUnsolvable, "Toeplitz systems Tx = f, Ty = e1 are not solvable");
  }
  // T1, T2: circulants with first columns y and x.
  // U1: unit upper-triangular Toeplitz with first row (1, -x_n, ..., -x_2).
  // U2: strictly upper-triangular Toeplitz with first row (0, y_n, ..., y_2).
  RatMatrix t1(n, n), t2(n, n), u1(n, n), u2(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      t1(i, j) = (*y)[(i + n - j) % n];
      t2(i, j) = (*x)[(i + n - j) % n];
      if (j > i) {
        u1(i, j) = -(*x)[n - (j - i)];
        u2(i, j) = (*y)[n - (j - i)];
      } else if (i == j) {
        u1(i, j) = 1;
      }
    }
  }
  RatMatrix candidate = t1 * u1 + t2 * u2;
  if (!(tm * candidate == ToRational(Identity(n)))) {
    throw Error(ErrorCode::kFormulaVerification,
                "T1 U1 + T2 U2 does not invert T (back-verification failed)");
  }
  return candidate;
}

}  // namespace ksym
