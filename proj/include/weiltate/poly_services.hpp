#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weiltate/int_poly.hpp"
#include "weiltate/prime_field_poly.hpp"

namespace weiltate {

/// Degrees of the irreducible factors of a polynomial over F_p, counted with
/// multiplicity, as (degree, count) pairs sorted by degree.
struct DegreePattern {
  std::vector<std::pair<int, int>> parts;
  bool squarefree = true;

  /// Sum of degree * count.
  int total_degree() const;
  /// Number of irreducible factors of the given degree (with multiplicity).
  int count(int degree) const;
  std::string to_string() const;

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Factorization pattern of f mod ell via squarefree decomposition followed by
/// distinct-degree factorization. No equal-degree splitting is performed.
DegreePattern factor_degree_pattern(const IntPolynomial& f, std::uint32_t ell);
DegreePattern factor_degree_pattern(const PrimeFieldPoly& f);

/// deg gcd(f, x^ell - x) over F_ell.
int count_distinct_roots_mod(const IntPolynomial& f, std::uint32_t ell);

/// Number of distinct real roots of a squarefree f via a Sturm sequence over
/// Q evaluated at -inf and +inf. Throws NotSquarefree if gcd(f, f') != 1.
int sturm_real_roots(const IntPolynomial& f);

struct CrtConstraint {
  BigInt modulus;
  IntPolynomial residue;
};

/// Monic degree-g polynomial whose lower coefficients lie in [0, prod m_i) and
/// reduce to each residue. Every residue must reduce to a monic degree-g
/// polynomial modulo its own modulus.
IntPolynomial crt_poly(const std::vector<CrtConstraint>& constraints, int degree);

}  // namespace weiltate
