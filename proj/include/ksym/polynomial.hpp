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

#ifndef KSYM_POLYNOMIAL_HPP_
#define KSYM_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ksym {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over the integers. Coefficients are stored in
// ascending degree order with no trailing zeros; the zero polynomial has no
// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial Constant(const Integer& c);
  static IntPolynomial X();
  // x - root
  static IntPolynomial Linear(const Integer& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  Integer coeff(int i) const;
  const Integer& leading() const;

  Integer Evaluate(const Integer& t) const;
  Rational Evaluate(const Rational& t) const;
  IntPolynomial Derivative() const;
  IntPolynomial Pow(unsigned exponent) const;
  // p(x + t)
  IntPolynomial TaylorShift(const Integer& t) const;
  // gcd of the coefficients, non-negative.
  Integer Content() const;
  // p / content, with positive leading coefficient.
  IntPolynomial PrimitivePart() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void Trim();

  std::vector<Integer> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Long division by a monic divisor; always exact over the integers.
PolynomialDivision DivideByMonic(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial Multiply(const IntPolynomial& p, const IntPolynomial& q);

// Throws Error(kInexactDivision) carrying the remainder when q does not
// divide p. q must be monic.
IntPolynomial DivideExact(const IntPolynomial& p, const IntPolynomial& q);

// Primitive-part Euclid. The result is normalized to a positive leading
// coefficient, which makes it monic whenever either input is monic.
IntPolynomial Gcd(const IntPolynomial& p, const IntPolynomial& q);

// p / gcd(p, p'), for monic p.
IntPolynomial SquarefreePart(const IntPolynomial& p);

struct IntegerRoot {
  Integer value;
  int multiplicity = 0;
};

struct RootSplit {
  std::vector<IntegerRoot> roots;  // ascending by value
  IntPolynomial residual;          // no integer roots
};

// Strips every integer root of a monic polynomial. The product
// residual * prod (x - r)^mult reconstructs p exactly.
RootSplit IntegerRoots(const IntPolynomial& p);

// Rebuilds residual * prod (x - r)^mult.
IntPolynomial Reconstruct(const RootSplit& split);

// Number of roots strictly greater than t. Only meaningful for polynomials
// whose roots are all real (Descartes' rule is then exact) and which do not
// vanish at t.
int CountRootsAbove(const IntPolynomial& p, const Integer& t);

// Real roots of a real-rooted square-free polynomial as doubles, ascending,
// refined by exact-sign bisection to the given width. Display only.
std::vector<double> ApproximateRealRoots(const IntPolynomial& p,
                                         double tolerance = 1e-9);

// Expanded form, e.g. "x^3 - 6x^2 + 9x".
std::string ToString(const IntPolynomial& p);

// Factored form with integer roots ascending and the residual last, e.g.
// "x(x-1)^2(x-3)^2(x-4)" or "x(x-2)(x^2-4x+2)".
std::string FactoredString(const RootSplit& split);

}  // namespace ksym

#endif  // KSYM_POLYNOMIAL_HPP_
