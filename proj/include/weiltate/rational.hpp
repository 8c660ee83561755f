#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace weiltate {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational. Values produced by this library are always
/// canonical (lowest terms, positive denominator).
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

/// "num/den" in lowest terms, or just "num" for integers.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Accepts "n" or "n/d" with optional sign and surrounding blanks. Throws
/// HypothesisError on malformed text or zero denominator.
BigRational parse_rational(std::string_view text);

/// Fractional part in [0, 1).
BigRational frac(const BigRational& q);

BigInt lcm(const BigInt& a, const BigInt& b);

/// Narrowing conversion; throws CapExceeded if the value does not fit.
std::int64_t to_int64(const BigInt& z);

}  // namespace weiltate
