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

#include "ksym/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "ksym/error.hpp"

namespace ksym {

namespace {

// Sign variations in a coefficient sequence, zeros skipped.
template <typename T>
int SignVariations(const std::vector<T>& coeffs) {
  int variations = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

template <typename T>
std::vector<T> ShiftCoefficients(std::vector<T> c, const T& t) {
  // Repeated synthetic division: after the pass for index i the low
  // coefficients hold p(x + t) in ascending order.
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = n - 2; j >= i; --j) {
      c[j] += t * c[j + 1];
    }
  }
  return c;
}

// Integer upper bound on |root| for a monic polynomial (Fujiwara).
Integer RootBound(const IntPolynomial& p) {
  const int n = p.degree();
  Integer best = 0;
  for (int i = 1; i <= n; ++i) {
    Integer a = abs(p.coeff(n - i));
    if (i == n) a = (a + 1) / 2;
    if (a == 0) continue;
    Integer r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(i));
    r += 1;
    best = std::max(best, r);
  }
  return 2 * best;
}

std::string MonomialTerm(const Integer& c, int power, bool first) {
  std::ostringstream out;
  const bool negative = c < 0;
  const Integer magnitude = abs(c);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (power == 0 || magnitude != 1) out << magnitude.get_str();
  if (power >= 1) out << "x";
  if (power >= 2) out << "^" << power;
  return out.str();
}

// Compact expanded form without spaces, used inside factored output.
std::string CompactString(const IntPolynomial& p) {
  std::string s = ToString(p);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  Trim();
}

IntPolynomial IntPolynomial::Constant(const Integer& c) {
  return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::X() {
  return IntPolynomial(std::vector<Integer>{0, 1});
}

IntPolynomial IntPolynomial::Linear(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, 1});
}

void IntPolynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

Integer IntPolynomial::Evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPolynomial::Evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + Rational(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::Derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::Pow(unsigned exponent) const {
  IntPolynomial result = Constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::TaylorShift(const Integer& t) const {
  return IntPolynomial(ShiftCoefficients(coeffs_, t));
}

Integer IntPolynomial::Content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPolynomial IntPolynomial::PrimitivePart() const {
  if (is_zero()) return {};
  Integer g = Content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& k, const IntPolynomial& p) {
  std::vector<Integer> c = p.coeffs_;
  for (auto& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

PolynomialDivision DivideByMonic(const IntPolynomial& p, const IntPolynomial& q) {
  if (!q.is_monic()) {
    throw Error(ErrorCode::kInvalidArgument, "divisor must be monic");
  }
  if (p.degree() < q.degree()) return {IntPolynomial{}, p};
  std::vector<Integer> rem = p.coeffs();
  const int dq = q.degree();
  std::vector<Integer> quot(static_cast<size_t>(p.degree() - dq + 1));
  for (int i = p.degree(); i >= dq; --i) {
    const Integer c = rem[static_cast<size_t>(i)];
    quot[static_cast<size_t>(i - dq)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<size_t>(i - dq + j)] -= c * q.coeffs()[static_cast<size_t>(j)];
    }
  }
  rem.resize(static_cast<size_t>(dq));
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial Multiply(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial DivideExact(const IntPolynomial& p, const IntPolynomial& q) {
  PolynomialDivision d = DivideByMonic(p, q);
  if (!d.remainder.is_zero()) {
    throw Error(ErrorCode::kInexactDivision,
                "inexact division: remainder " + ToString(d.remainder));
  }
  return d.quotient;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, all in Z[x].
IntPolynomial PseudoRemainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Integer c = r[static_cast<size_t>(i)];
    for (auto& x : r) x *= lb;
    if (c != 0) {
      for (int j = 0; j <= db; ++j) {
        r[static_cast<size_t>(i - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
      }
    }
    r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial Gcd(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial a = p.PrimitivePart();
  IntPolynomial b = q.PrimitivePart();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = PseudoRemainder(a, b);
    a = std::move(b);
    b = r.PrimitivePart();
  }
  return a.PrimitivePart();
}

IntPolynomial SquarefreePart(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  return DivideExact(p, Gcd(p, p.Derivative()));
}

RootSplit IntegerRoots(const IntPolynomial& p) {
  if (!p.is_monic()) {
    throw Error(ErrorCode::kInvalidArgument, "integer root extraction needs a monic polynomial");
  }
  RootSplit split;
  std::vector<Integer> c = p.coeffs();
  int zeros = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zeros;
  }
  IntPolynomial rest(std::move(c));
  if (zeros > 0) split.roots.push_back({0, zeros});
  if (rest.degree() >= 1) {
    const Integer bound = RootBound(rest);
    for (Integer r = -bound; r <= bound && rest.degree() >= 1; ++r) {
      if (r == 0) continue;
      if (!mpz_divisible_p(rest.coeff(0).get_mpz_t(), r.get_mpz_t())) continue;
      int mult = 0;
      while (rest.degree() >= 1 && rest.Evaluate(r) == 0) {
        rest = DivideExact(rest, IntPolynomial::Linear(r));
        ++mult;
      }
      if (mult > 0) split.roots.push_back({r, mult});
    }
  }
  std::sort(split.roots.begin(), split.roots.end(),
            [](const IntegerRoot& a, const IntegerRoot& b) { return a.value < b.value; });
  split.residual = std::move(rest);
  return split;
}

IntPolynomial Reconstruct(const RootSplit& split) {
  IntPolynomial p = split.residual;
  for (const auto& root : split.roots) {
    p = p * IntPolynomial::Linear(root.value).Pow(static_cast<unsigned>(root.multiplicity));
  }
  return p;
}

int CountRootsAbove(const IntPolynomial& p, const Integer& t) {
  std::vector<Integer> shifted = p.TaylorShift(t).coeffs();
  while (shifted.size() > 1 && shifted.front() == 0) shifted.erase(shifted.begin());
  return SignVariations(shifted);
}

std::vector<double> ApproximateRealRoots(const IntPolynomial& p, double tolerance) {
  std::vector<double> roots;
  if (p.degree() < 1) return roots;
  std::vector<Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
  // Number of roots > t for rational t.
  auto above = [&](const Rational& t) {
    auto shifted = ShiftCoefficients(coeffs, t);
    while (shifted.size() > 1 && shifted.front() == 0) shifted.erase(shifted.begin());
    return SignVariations(shifted);
  };
  Integer b = 1;
  for (const auto& c : p.coeffs()) b = std::max(b, Integer(abs(c)));
  const Rational bound(b / abs(p.leading()) + 1);
  const Rational tol(tolerance);

  std::function<void(Rational, Rational, int)> isolate = [&](Rational lo, Rational hi, int count) {
    if (count == 0) return;
    if (count == 1 || hi - lo < tol) {
      // Exact-sign bisection on a single-root interval (lo, hi].
      while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        const int sm = sgn(p.Evaluate(mid));
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        if (sgn(p.Evaluate(hi)) * sm <= 0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      for (int i = 0; i < count; ++i) roots.push_back(Rational((lo + hi) / 2).get_d());
      return;
    }
    Rational mid = (lo + hi) / 2;
    const int right = above(mid) - above(hi);
    isolate(lo, mid, count - right);
    isolate(mid, hi, right);
  };
  const Rational lo = -bound;
  isolate(lo, bound, above(lo) - above(bound));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string ToString(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer c = p.coeff(i);
    if (c == 0) continue;
    out += MonomialTerm(c, i, first);
    first = false;
  }
  return out;
}

std::string FactoredString(const RootSplit& split) {
  std::ostringstream out;
  for (const auto& root : split.roots) {
    if (root.value == 0) {
      out << "x";
    } else if (root.value > 0) {
      out << "(x-" << root.value.get_str() << ")";
    } else {
      out << "(x+" << Integer(-root.value).get_str() << ")";
    }
    if (root.multiplicity > 1) out << "^" << root.multiplicity;
  }
  if (split.residual.degree() >= 1) {
    out << "(" << CompactString(split.residual) << ")";
  } else if (split.roots.empty() || !split.residual.is_one()) {
    out << CompactString(split.residual);
  }
  return out.str();
}

}  // namespace ksym
