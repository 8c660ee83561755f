#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weiltate/int_poly.hpp"

namespace weiltate {

/// True iff n is prime (deterministic trial division; intended for n < 2^31).
bool is_small_prime(std::uint64_t n);

/// Polynomial over F_p for a prime p < 2^31, coefficients lowest degree first
/// and fully reduced. Products of two residues fit in 64 bits.
class PrimeFieldPoly {
 public:
  explicit PrimeFieldPoly(std::uint32_t modulus) : modulus_(modulus) {}
  PrimeFieldPoly(std::uint32_t modulus, std::vector<std::uint64_t> coeffs);

  /// Reduction of an integer polynomial mod p (negative coefficients handled).
  static PrimeFieldPoly reduce(const IntPolynomial& f, std::uint32_t modulus);
  static PrimeFieldPoly x(std::uint32_t modulus);
  static PrimeFieldPoly constant(std::uint32_t modulus, std::uint64_t c);

  std::uint32_t modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(int i) const;
  std::uint64_t leading() const { return coeffs_.back(); }

  PrimeFieldPoly monic() const;
  PrimeFieldPoly derivative() const;
  std::uint64_t evaluate(std::uint64_t x) const;

  friend PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend bool operator==(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; divisor must be nonzero.
  void divmod(const PrimeFieldPoly& divisor, PrimeFieldPoly& quotient, PrimeFieldPoly& remainder) const;
  PrimeFieldPoly operator%(const PrimeFieldPoly& divisor) const;
  PrimeFieldPoly operator/(const PrimeFieldPoly& divisor) const;

  /// Monic gcd (zero if both inputs are zero).
  static PrimeFieldPoly gcd(PrimeFieldPoly a, PrimeFieldPoly b);

  /// base^e mod m by square-and-multiply.
  static PrimeFieldPoly powmod(const PrimeFieldPoly& base, const BigInt& e, const PrimeFieldPoly& m);

  /// Lift to Z[x] with coefficients in [0, p).
  IntPolynomial lift() const;
  std::string to_string() const;

 private:
  void normalize();
  std::uint64_t inv(std::uint64_t a) const;

  std::uint32_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

}  // namespace weiltate
