#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "weiltate/rational.hpp"

namespace weiltate {

/// Dense univariate polynomial over Z, coefficients stored lowest degree
/// first. The representation is normalized: no trailing (leading-degree) zero
/// coefficients, so the zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// x^n
  static IntPolynomial monomial(int n, const BigInt& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Substitute x -> x + shift.
  IntPolynomial translate(const BigInt& shift) const;

  /// Human-readable form, highest degree first: "x^2 + 5*x + 2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace weiltate
