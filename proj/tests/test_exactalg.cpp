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

#include <cmath>
#include <random>

#include "ksym/error.hpp"
#include "ksym/exact.hpp"
#include "ksym/polynomial.hpp"
#include "support/error_code.hpp"
#include "support/oracles.hpp"

namespace ksym {
namespace {

IntPolynomial P(std::vector<long> ascending) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(c);
}

Rational Q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

TEST_CASE("special matrices") {
  CHECK(Special(SpecialKind::kIdentity, 2) == IntMatrix{{1, 0}, {0, 1}});
  CHECK(Special(SpecialKind::kAllOnes, 2) == IntMatrix{{1, 1}, {1, 1}});
  const IntMatrix ones = Special(SpecialKind::kOnesVector, 3);
  CHECK(ones.rows() == 3);
  CHECK(ones.cols() == 1);
  CHECK(ones == IntMatrix{{1}, {1}, {1}});
}

TEST_CASE("determinant") {
  CHECK(Determinant(Identity(3) + AllOnes(3)) == 4);
  for (size_t n = 1; n <= 6; ++n) CHECK(Determinant(Identity(n)) == 1);
  const IntMatrix tri{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  CHECK(oracle::CofactorDeterminant(tri) == 4);
  CHECK(Determinant(tri) == 4);
  CHECK(CodeOf([] { Determinant(IntMatrix(2, 3)); }) == ErrorCode::kNotSquare);
}

TEST_CASE("determinant needs pivoting") {
  const IntMatrix m{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
  CHECK(Determinant(m) == oracle::CofactorDeterminant(m));
  const IntMatrix zero_corner{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  CHECK(Determinant(zero_corner) == -1);
}

TEST_CASE("rank") {
  CHECK(Rank(AllOnes(3)) == 1);
  CHECK(Rank(Identity(4)) == 4);
  const IntMatrix lk3{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK(oracle::MinorRank(lk3) == 2);
  CHECK(Rank(lk3) == 2);
  CHECK(Rank(IntMatrix(2, 5)) == 0);
  CHECK(Rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("charpoly") {
  CHECK(CharacteristicPolynomial(IntMatrix(3, 3)) == P({0, 0, 0, 1}));
  CHECK(CharacteristicPolynomial(Identity(2)) == P({1, -2, 1}));
  const IntMatrix lk3{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK(oracle::CofactorCharpoly(lk3) == P({0, 9, -6, 1}));
  CHECK(CharacteristicPolynomial(lk3) == P({0, 9, -6, 1}));
  CHECK(CodeOf([] { CharacteristicPolynomial(IntMatrix(1, 2)); }) == ErrorCode::kNotSquare);
}

TEST_CASE("charpoly of a non-symmetric matrix") {
  const IntMatrix m{{1, 2, 0}, {0, 3, -1}, {5, 0, 2}};
  CHECK(CharacteristicPolynomial(m) == oracle::CofactorCharpoly(m));
}

TEST_CASE("kron") {
  const IntMatrix k = Kron(Identity(2), AllOnes(2));
  CHECK(k == IntMatrix{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
  CHECK(Determinant(Kron(IntMatrix{{2}}, Identity(2))) == 4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const IntMatrix a = oracle::RandomIntMatrix(rng, 2, 2, -4, 4);
    const IntMatrix b = oracle::RandomIntMatrix(rng, 2, 2, -4, 4);
    const IntMatrix c = oracle::RandomIntMatrix(rng, 2, 2, -4, 4);
    const IntMatrix d = oracle::RandomIntMatrix(rng, 2, 2, -4, 4);
    CHECK(Kron(a, b) * Kron(c, d) == Kron(a * c, b * d));
  }
}

TEST_CASE("schur determinant") {
  const RatMatrix a11{{Q(4)}};
  const RatMatrix a12{{Q(1), Q(1)}};
  const RatMatrix a21{{Q(1)}, {Q(1)}};
  const RatMatrix a22{{Q(2), Q(0)}, {Q(0), Q(2)}};
  CHECK(SchurDeterminant(a11, a12, a21, a22) == 12);
  CHECK(oracle::CofactorDeterminant(AssembleBlocks(a11, a12, a21, a22)) == 12);

  const RatMatrix z12(1, 2), z21(2, 1);
  const RatMatrix b22{{Q(3), Q(1)}, {Q(1), Q(5)}};
  CHECK(SchurDeterminant(RatMatrix{{Q(7)}}, z12, z21, b22) == Q(7) * Q(14));

  const RatMatrix c12{{Q(1), Q(0)}};
  const RatMatrix c21{{Q(1)}, {Q(0)}};
  const RatMatrix id2 = ToRational(Identity(2));
  CHECK(SchurDeterminant(RatMatrix{{Q(1)}}, c12, c21, id2) == 0);

  CHECK(CodeOf([&] { SchurDeterminant(a11, a12, a21, RatMatrix(2, 2)); }) ==
        ErrorCode::kSingular);
}

TEST_CASE("aI + bJ") {
  CHECK(AibjDeterminant(Q(1), Q(1), 2) == 3);
  const RatMatrix inv = AibjInverse(Q(1), Q(1), 2);
  CHECK(inv == RatMatrix{{Q(2, 3), Q(-1, 3)}, {Q(-1, 3), Q(2, 3)}});
  CHECK(AibjMatrix(Q(1), Q(1), 2) * inv == ToRational(Identity(2)));

  CHECK(AibjDeterminant(Q(3), Q(0), 4) == 81);
  CHECK(AibjInverse(Q(3), Q(0), 4) == Q(1, 3) * ToRational(Identity(4)));

  CHECK(AibjDeterminant(Q(1), Q(-1, 3), 3) == 0);
  CHECK(CodeOf([] { AibjInverse(Q(1), Q(-1, 3), 3); }) == ErrorCode::kSingular);
  CHECK(CodeOf([] { AibjInverse(Q(0), Q(2), 3); }) == ErrorCode::kSingular);
}

TEST_CASE("toeplitz inverse") {
  const RatMatrix inv = ToeplitzInverse(ToeplitzSpec::FromMatrix(AibjMatrix(Q(1), Q(1), 2)));
  CHECK(inv == RatMatrix{{Q(2, 3), Q(-1, 3)}, {Q(-1, 3), Q(2, 3)}});
  for (size_t n = 1; n <= 5; ++n) {
    CHECK(ToeplitzInverse(ToeplitzSpec::FromMatrix(ToRational(Identity(n)))) ==
          ToRational(Identity(n)));
  }
  const RatMatrix expected = Q(1, 10) * (Q(5) * ToRational(Identity(3)) - ToRational(AllOnes(3)));
  CHECK(ToeplitzInverse(ToeplitzSpec::FromMatrix(AibjMatrix(Q(2), Q(1), 3))) == expected);
}

TEST_CASE("toeplitz readings on a non-symmetric matrix") {
  // T = [[1, 2], [3, 1]]: a_0 = 1, a_1 = 3, a_{-1} = 2.
  const ToeplitzSpec t(2, {Q(2), Q(1), Q(3)});
  CHECK(t.ToMatrix() == RatMatrix{{Q(1), Q(2)}, {Q(3), Q(1)}});
  const RatMatrix inv = ToeplitzInverse(t);
  CHECK(t.ToMatrix() * inv == ToRational(Identity(2)));
  CHECK(CodeOf([&] { ToeplitzInverse(t, ToeplitzReading::kLiteral); }) ==
        ErrorCode::kFormulaVerification);
}

TEST_CASE("toeplitz singular first system") {
  // a_0 = 0 makes T e_1-solvability fail for the zero matrix.
  const ToeplitzSpec zero(2, {Q(0), Q(0), Q(0)});
  CHECK(CodeOf([&] { ToeplitzInverse(zero); }) == ErrorCode::kUnsolvable);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(Multiply(P({-1, 1}), P({-4, 1})) == P({4, -5, 1}));
  CHECK(DivideExact(P({4, -5, 1}), P({-1, 1})) == P({-4, 1}));
  const IntPolynomial cubic = P({0, 9, -6, 1});
  CHECK(Gcd(cubic, P({-3, 1})) == P({-3, 1}));
  CHECK(Gcd(cubic, cubic.Derivative()) == P({-3, 1}));
  CHECK(SquarefreePart(cubic) == P({0, -3, 1}));
  CHECK(ToString(P({0, 9, -6, 1})) == "x^3 - 6x^2 + 9x");
}

TEST_CASE("inexact division reports the remainder") {
  try {
    DivideExact(P({1, 0, 1}), P({-1, 1}));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInexactDivision);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("integer roots") {
  RootSplit s = IntegerRoots(P({4, -5, 1}));
  REQUIRE(s.roots.size() == 2);
  CHECK(s.roots[0].value == 1);
  CHECK(s.roots[1].value == 4);
  CHECK(s.residual.is_one());

  s = IntegerRoots(P({2, -4, 1}));
  CHECK(s.roots.empty());
  CHECK(s.residual == P({2, -4, 1}));

  s = IntegerRoots(P({0, 0, 0, 1}));
  REQUIRE(s.roots.size() == 1);
  CHECK(s.roots[0].value == 0);
  CHECK(s.roots[0].multiplicity == 3);
  CHECK(s.residual.is_one());
}

TEST_CASE("integer roots with negative and repeated values") {
  const IntPolynomial p =
      Multiply(Multiply(P({2, 1}).Pow(3), P({-7, 1})), Multiply(P({1, 0, 1}), P({0, 1})));
  const RootSplit s = IntegerRoots(p);
  REQUIRE(s.roots.size() == 3);
  CHECK(s.roots[0].value == -2);
  CHECK(s.roots[0].multiplicity == 3);
  CHECK(s.roots[1].value == 0);
  CHECK(s.roots[2].value == 7);
  CHECK(s.residual == P({1, 0, 1}));
  CHECK(Reconstruct(s) == p);
  const auto scanned = oracle::ScanIntegerRoots(p, -20, 20);
  REQUIRE(scanned.size() == 3);
  CHECK(scanned[0].second == 3);
}

TEST_CASE("factored form") {
  const IntPolynomial p =
      Multiply(Multiply(P({0, 1}), P({-1, 1}).Pow(2)), Multiply(P({-3, 1}).Pow(2), P({-4, 1})));
  CHECK(FactoredString(IntegerRoots(p)) == "x(x-1)^2(x-3)^2(x-4)");
  const IntPolynomial q = Multiply(Multiply(P({0, 1}), P({-2, 1})), P({2, -4, 1}));
  CHECK(FactoredString(IntegerRoots(q)) == "x(x-2)(x^2-4x+2)");
}

TEST_CASE("roots above a threshold") {
  // x^2 - 4x + 2 has roots 2 +- sqrt 2.
  const IntPolynomial p = P({2, -4, 1});
  CHECK(CountRootsAbove(p, 0) == 2);
  CHECK(CountRootsAbove(p, 1) == 1);
  CHECK(CountRootsAbove(p, 3) == 1);
  CHECK(CountRootsAbove(p, 4) == 0);
  const auto approx = ApproximateRealRoots(p);
  REQUIRE(approx.size() == 2);
  CHECK(approx[0] == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-9));
  CHECK(approx[1] == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-9));
}

}  // namespace
}  // namespace ksym
