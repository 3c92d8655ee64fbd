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

#ifndef KSYM_EXACT_HPP_
#define KSYM_EXACT_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksym/error.hpp"
#include "ksym/polynomial.hpp"

namespace ksym {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(size_t rows, size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix data length does not match shape");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& data() const { return data_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix Transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    RequireSameShape(a, b);
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    RequireSameShape(a, b);
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
    }
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }

 private:
  static void RequireSameShape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
    }
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

enum class SpecialKind { kIdentity, kAllOnes, kOnesVector };

// I_n, J_n or the n x 1 all-ones column.
IntMatrix Special(SpecialKind kind, size_t n);
IntMatrix Identity(size_t n);
IntMatrix AllOnes(size_t n);
IntMatrix OnesVector(size_t n);

RatMatrix ToRational(const IntMatrix& m);

// Fraction-free (Bareiss) elimination with row pivoting.
Integer Determinant(const IntMatrix& m);
Rational Determinant(const RatMatrix& m);

// Rank over Q via fraction-free row echelon form.
size_t Rank(const IntMatrix& m);

// det(xI - M) from det(tI - M) at t = 0..n, interpolated in Newton form.
// The divided differences are divided exactly, so the result is integral
// without passing through rationals.
IntPolynomial CharacteristicPolynomial(const IntMatrix& m);

template <typename T>
Matrix<T> Kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t p = 0; p < b.rows(); ++p)
        for (size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

// Throws Error(kSingular).
RatMatrix Inverse(const RatMatrix& m);

// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> Solve(const RatMatrix& m, const std::vector<Rational>& rhs);

RatMatrix AssembleBlocks(const RatMatrix& a11, const RatMatrix& a12, const RatMatrix& a21,
                         const RatMatrix& a22);

// det [[A11, A12], [A21, A22]] = det(A22) det(A11 - A12 A22^-1 A21).
Rational SchurDeterminant(const RatMatrix& a11, const RatMatrix& a12, const RatMatrix& a21,
                          const RatMatrix& a22);

// det(aI_n + bJ_n) = a^(n-1) (a + nb)
Rational AibjDeterminant(const Rational& a, const Rational& b, size_t n);
// (aI_n + bJ_n)^-1 = ((a + nb) I_n - b J_n) / (a (a + nb)); throws kSingular.
RatMatrix AibjInverse(const Rational& a, const Rational& b, size_t n);
RatMatrix AibjMatrix(const Rational& a, const Rational& b, size_t n);

// Toeplitz matrix T with T(i, j) = a_{i-j}.
class ToeplitzSpec {
 public:
  // diagonals[d + n - 1] holds a_d for d in -(n-1)..(n-1).
  ToeplitzSpec(size_t n, std::vector<Rational> diagonals);
  static ToeplitzSpec FromMatrix(const RatMatrix& m);
  // a_d = a_{-d} = first_column[d].
  static ToeplitzSpec Symmetric(std::vector<Rational> first_column);

  size_t size() const { return n_; }
  const Rational& a(long d) const;
  RatMatrix ToMatrix() const;

 private:
  size_t n_;
  std::vector<Rational> diagonals_;
};

// Which index order to use for the right-hand side f of T x = f.
//  kTransposed: f = (0, a_{-(n-1)} - a_1, ..., a_{-1} - a_{n-1})
//  kLiteral:    f = (0, a_{n-1} - a_{-1}, ..., a_1 - a_{-(n-1)})
// Only kTransposed reproduces T^-1 for non-symmetric T; both agree (f = 0)
// when T is symmetric.
enum class ToeplitzReading { kTransposed, kLiteral };

std::vector<Rational> ToeplitzRhs(const ToeplitzSpec& t, ToeplitzReading reading);

// Two-solve inversion T^-1 = T1 U1 + T2 U2 with mandatory back-verification.
// Throws kUnsolvable if T x = f or T y = e_1 has no solution and
// kFormulaVerification if the assembled candidate is not T^-1.
RatMatrix ToeplitzInverse(const ToeplitzSpec& t,
                          ToeplitzReading reading = ToeplitzReading::kTransposed);

template <typename T>
std::string ToString(const Matrix<T>& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace ksym

#endif  // KSYM_EXACT_HPP_
