#pragma once

#include <cstdint>
#include <string>

#include "weiltate/int_poly.hpp"
#include "weiltate/poly_services.hpp"

namespace weiltate {

inline constexpr int kDefaultForgeBudget = 64;

enum class Splitting { Inert, Split, Ramified };
enum class QuadSignature { Real, Imaginary };

Splitting parse_splitting(const std::string& text);
std::string to_string(Splitting s);

/// Behavior of p in Q(sqrt d) for squarefree d != 0, 1.
Splitting quadratic_splitting(std::int64_t d, std::uint32_t p);

/// Squarefree part of a nonzero integer, keeping the sign.
std::int64_t squarefree_kernel(std::int64_t n);

/// The `index`-th (0-based) squarefree d != 0, 1 in order of increasing |d|
/// such that Q(sqrt d) has the requested signature and splitting at p.
std::int64_t forge_quadratic(std::uint32_t p, Splitting splitting, QuadSignature signature, int index = 0);

/// Certificates recomputed from the polynomial alone.
struct FieldCertificates {
  DegreePattern pattern_at_p;
  DegreePattern pattern_at_l;
  DegreePattern pattern_at_lp;
  int roots_at_lp = 0;
  DegreePattern pattern_at_aux;  // linear times irreducible of degree g-1 (g >= 4)
  int real_root_count = 0;
  bool galois_is_sg = false;

  friend bool operator==(const FieldCertificates&, const FieldCertificates&) = default;
};

struct ForgedField {
  IntPolynomial poly;
  int g = 0;
  std::uint32_t p = 0;
  std::uint32_t l = 0;
  std::uint32_t lp = 0;
  std::uint32_t aux = 0;  // auxiliary prime certifying a (g-1)-cycle; 0 when g = 2
  std::uint64_t seed = 0;
  BigInt spread;  // the constant K that passed
  FieldCertificates certificates;
};

struct ForgeOptions {
  int budget = kDefaultForgeBudget;
};

/// Monic degree-g polynomial, irreducible mod p and mod l, with g-2 distinct
/// roots and an irreducible quadratic factor mod lp, and g real roots.
/// Throws HypothesisError on bad inputs and CapExceeded when the spread
/// escalation budget runs out.
ForgedField forge_totally_real(int g, std::uint32_t p, std::uint32_t l, std::uint32_t lp, std::uint64_t seed,
                               const ForgeOptions& options = {});

/// Recompute every certificate of f from its polynomial and primes.
FieldCertificates compute_certificates(const ForgedField& field);

/// True when the stored certificates match fresh ones and every one passes.
bool certificates_pass(const ForgedField& field);

/// g-cycle at l, transposition at lp and, for g >= 4, a (g-1)-cycle at the
/// auxiliary prime. A transitive group with a transposition and a (g-1)-cycle
/// is S_g. For g = 2 this is irreducibility mod l.
bool certify_galois_sg(const ForgedField& field);

/// Smallest prime > g different from the three given ones.
std::uint32_t auxiliary_prime(int g, std::uint32_t p, std::uint32_t l, std::uint32_t lp);

}  // namespace weiltate
