#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mbkit/errors.hpp"

namespace mbkit {

using Int = boost::multiprecision::cpp_int;

// Dense polynomial in one variable t with arbitrary-precision integer
// coefficients. coefficient(k) is the coefficient of t^k. The representation
// is canonical: trailing zeros are never stored and the zero polynomial is
// the empty coefficient sequence, so operator== on the stored vectors is
// semantic equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  IntPolynomial(std::initializer_list<Int> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({Int(1)}); }

  // The monomial c * t^k.
  static IntPolynomial monomial(Int c, std::size_t k) {
    if (c == 0) return IntPolynomial();
    std::vector<Int> v(k + 1);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Int coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Int(0);
  }

  const std::vector<Int>& coefficients() const { return coeffs_; }

  bool is_nonnegative() const {
    for (const Int& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  Int evaluate(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  // p * t^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPolynomial();
    std::vector<Int> v(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }

  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }

  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  // Human-readable form, e.g. "1 + 2t + t^2", "t - t^3", "0".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Int& c = coeffs_[k];
      if (c == 0) continue;
      Int mag = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || k == 0) out << mag.str();
      if (k >= 1) out << "t";
      if (k >= 2) out << "^" << k;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

struct DivisionResult {
  IntPolynomial quotient;
  bool exact = false;
};

// Divide by (1 + t). Synthetic division: with p = sum c_k t^k of degree d,
// the candidate quotient q has q_{d-1} = c_d and q_{k-1} = c_k - q_k going
// down; the division is exact iff the final remainder c_0 - q_0 vanishes,
// equivalently p(-1) == 0. The reconstruction (1+t) * q == p is re-checked
// before reporting exactness. When inexact, the quotient field is the zero
// polynomial and must not be used.
inline DivisionResult divide_by_one_plus_t(const IntPolynomial& p) {
  if (p.is_zero()) return {IntPolynomial(), true};
  const auto& c = p.coefficients();
  const std::size_t d = c.size() - 1;
  if (d == 0) return {IntPolynomial(), false};
  std::vector<Int> q(d);
  q[d - 1] = c[d];
  for (std::size_t k = d - 1; k >= 1; --k) q[k - 1] = c[k] - q[k];
  if (c[0] - q[0] != 0) return {IntPolynomial(), false};
  IntPolynomial quotient(std::move(q));
  if (IntPolynomial({Int(1), Int(1)}) * quotient != p)
    return {IntPolynomial(), false};
  return {std::move(quotient), true};
}

// Coefficient reversal t^cap * p(1/t): coefficient k of the result is
// coefficient (cap - k) of p. Requires cap >= degree(p); reversing the zero
// polynomial gives zero for any cap.
inline IntPolynomial reverse(const IntPolynomial& p, std::size_t degree_cap) {
  if (p.is_zero()) return IntPolynomial();
  if (static_cast<long>(degree_cap) < p.degree())
    throw input_error("reverse: degree cap " + std::to_string(degree_cap) +
                      " is below the polynomial degree " +
                      std::to_string(p.degree()));
  std::vector<Int> v(degree_cap + 1);
  for (std::size_t k = 0; k <= degree_cap; ++k)
    v[degree_cap - k] = p.coefficient(k);
  return IntPolynomial(std::move(v));
}

}  // namespace mbkit
