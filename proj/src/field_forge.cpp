#include "weiltate/field_forge.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "weiltate/errors.hpp"
#include "weiltate/prime_field_poly.hpp"

namespace weiltate {

Splitting parse_splitting(const std::string& text) {
  if (text == "inert") return Splitting::Inert;
  if (text == "split") return Splitting::Split;
  if (text == "ramified") return Splitting::Ramified;
  throw HypothesisError("unknown splitting '" + text + "'");
}

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::Inert:
      return "inert";
    case Splitting::Split:
      return "split";
    case Splitting::Ramified:
      return "ramified";
  }
  return "inert";
}

namespace {

bool squarefree_int(std::int64_t d) {
  std::int64_t a = d < 0 ? -d : d;
  for (std::int64_t k = 2; k * k <= a; ++k) {
    if (a % (k * k) == 0) return false;
  }
  return true;
}

// Euler's criterion for p odd, p not dividing a.
int legendre(std::int64_t a, std::uint32_t p) {
  std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + p) % p);
  std::uint64_t result = 1, e = (p - 1) / 2;
  while (e) {
    if (e & 1) result = result * r % p;
    r = r * r % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace

Splitting quadratic_splitting(std::int64_t d, std::uint32_t p) {
  if (p == 2) {
    const std::int64_t r8 = ((d % 8) + 8) % 8;
    if (r8 == 5) return Splitting::Inert;
    if (r8 == 1) return Splitting::Split;
    return Splitting::Ramified;
  }
  if (d % static_cast<std::int64_t>(p) == 0) return Splitting::Ramified;
  return legendre(d, p) == 1 ? Splitting::Split : Splitting::Inert;
}

std::int64_t squarefree_kernel(std::int64_t n) {
  if (n == 0) throw HypothesisError("zero has no squarefree kernel");
  std::int64_t sign = n < 0 ? -1 : 1, a = n < 0 ? -n : n, out = 1;
  for (std::int64_t k = 2; k * k <= a; ++k) {
    while (a % (k * k) == 0) a /= k * k;
    if (a % k == 0) {
      out *= k;
      a /= k;
    }
  }
  return sign * out * a;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

PrimeFieldPoly random_irreducible(int degree, std::uint32_t prime, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = draw(rng, prime);
    c.back() = 1;
    PrimeFieldPoly f(prime, std::move(c));
    DegreePattern pat = factor_degree_pattern(f);
    if (pat.squarefree && pat.parts == std::vector<std::pair<int, int>>{{degree, 1}}) return f;
  }
  throw CapExceeded("no irreducible polynomial found mod " + std::to_string(prime));
}

PrimeFieldPoly distinct_linears(int count, std::uint32_t prime, std::mt19937_64& rng) {
  std::vector<std::uint64_t> residues(prime);
  std::iota(residues.begin(), residues.end(), std::uint64_t{0});
  // Partial Fisher-Yates with our own draw for portable determinism.
  for (int i = 0; i < count; ++i) {
    std::size_t j = static_cast<std::size_t>(i) + draw(rng, prime - static_cast<std::uint64_t>(i));
    std::swap(residues[static_cast<std::size_t>(i)], residues[j]);
  }
  PrimeFieldPoly f = PrimeFieldPoly::constant(prime, 1);
  for (int i = 0; i < count; ++i) {
    f = f * PrimeFieldPoly(prime, {(prime - residues[static_cast<std::size_t>(i)]) % prime, 1});
  }
  return f;
}

DegreePattern expected_lp_pattern(int g) {
  DegreePattern d;
  if (g > 2) d.parts.emplace_back(1, g - 2);
  d.parts.emplace_back(2, 1);
  return d;
}

DegreePattern expected_aux_pattern(int g) {
  DegreePattern d;
  d.parts = {{1, 1}, {g - 1, 1}};
  return d;
}

DegreePattern irreducible_pattern(int g) {
  DegreePattern d;
  d.parts = {{g, 1}};
  return d;
}

BigInt centered_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

std::int64_t forge_quadratic(std::uint32_t p, Splitting splitting, QuadSignature signature, int index) {
  if (!is_small_prime(p)) throw HypothesisError(std::to_string(p) + " is not prime");
  if (index < 0) throw HypothesisError("negative index");
  int hits = 0;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t d = signature == QuadSignature::Imaginary ? -n : n;
    if (d == 1 || !squarefree_int(d)) continue;
    if (quadratic_splitting(d, p) != splitting) continue;
    if (hits++ == index) return d;
  }
}

std::uint32_t auxiliary_prime(int g, std::uint32_t p, std::uint32_t l, std::uint32_t lp) {
  for (std::uint32_t q = static_cast<std::uint32_t>(g) + 1;; ++q) {
    if (is_small_prime(q) && q != p && q != l && q != lp) return q;
  }
}

FieldCertificates compute_certificates(const ForgedField& field) {
  FieldCertificates c;
  const auto& f = field.poly;
  c.pattern_at_p = factor_degree_pattern(f, field.p);
  c.pattern_at_l = factor_degree_pattern(f, field.l);
  c.pattern_at_lp = factor_degree_pattern(f, field.lp);
  c.roots_at_lp = count_distinct_roots_mod(f, field.lp);
  if (field.aux != 0) c.pattern_at_aux = factor_degree_pattern(f, field.aux);
  try {
    c.real_root_count = sturm_real_roots(f);
  } catch (const NotSquarefree&) {
    c.real_root_count = -1;
  }
  c.galois_is_sg = certify_galois_sg(field);
  return c;
}

bool certify_galois_sg(const ForgedField& field) {
  const int g = field.g;
  if (field.poly.degree() != g || !field.poly.is_monic()) return false;
  DegreePattern at_l = factor_degree_pattern(field.poly, field.l);
  if (!at_l.squarefree || at_l.parts != irreducible_pattern(g).parts) return false;
  if (g == 2) return true;
  DegreePattern at_lp = factor_degree_pattern(field.poly, field.lp);
  if (!at_lp.squarefree || at_lp.parts != expected_lp_pattern(g).parts) return false;
  if (g == 3) return true;  // a 3-cycle and a transposition generate S_3
  if (field.aux == 0) return false;
  DegreePattern at_aux = factor_degree_pattern(field.poly, field.aux);
  return at_aux.squarefree && at_aux.parts == expected_aux_pattern(g).parts;
}

bool certificates_pass(const ForgedField& field) {
  const FieldCertificates fresh = compute_certificates(field);
  if (!(fresh == field.certificates)) return false;
  const int g = field.g;
  auto irreducible = [&](const DegreePattern& d) { return d.squarefree && d.parts == irreducible_pattern(g).parts; };
  if (!irreducible(fresh.pattern_at_p) || !irreducible(fresh.pattern_at_l)) return false;
  if (!fresh.pattern_at_lp.squarefree || fresh.pattern_at_lp.parts != expected_lp_pattern(g).parts) return false;
  if (fresh.roots_at_lp != g - 2) return false;
  if (fresh.real_root_count != g) return false;
  return fresh.galois_is_sg;
}

ForgedField forge_totally_real(int g, std::uint32_t p, std::uint32_t l, std::uint32_t lp, std::uint64_t seed,
                               const ForgeOptions& options) {
  if (g < 2 || g % 2 != 0) throw HypothesisError("g must be even and at least 2");
  for (auto q : {p, l, lp}) {
    if (q >= (1u << 31) || !is_small_prime(q)) throw HypothesisError(std::to_string(q) + " is not a prime below 2^31");
  }
  if (p == l || p == lp || l == lp) throw HypothesisError("primes p, l, l' must be distinct");
  if (l <= static_cast<std::uint32_t>(g) || lp <= static_cast<std::uint32_t>(g)) {
    throw HypothesisError("l and l' must exceed g");
  }
  if (options.budget < 1) throw HypothesisError("retry budget must be positive");

  ForgedField field;
  field.g = g;
  field.p = p;
  field.l = l;
  field.lp = lp;
  field.seed = seed;
  field.aux = g >= 4 ? auxiliary_prime(g, p, l, lp) : 0;

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(g), p, l, lp};
  std::mt19937_64 rng(seq);

  std::vector<CrtConstraint> constraints;
  constraints.push_back({BigInt(p), random_irreducible(g, p, rng).lift()});
  constraints.push_back({BigInt(l), random_irreducible(g, l, rng).lift()});
  PrimeFieldPoly at_lp = distinct_linears(g - 2, lp, rng) * random_irreducible(2, lp, rng);
  constraints.push_back({BigInt(lp), at_lp.lift()});
  if (field.aux != 0) {
    PrimeFieldPoly at_aux = distinct_linears(1, field.aux, rng) * random_irreducible(g - 1, field.aux, rng);
    constraints.push_back({BigInt(field.aux), at_aux.lift()});
  }
  const IntPolynomial p0 = crt_poly(constraints, g);
  BigInt modulus = 1;
  for (const auto& c : constraints) modulus *= c.modulus;

  BigInt k = BigInt(2) * BigInt(static_cast<unsigned long>(seed)) + 1;
  for (int attempt = 0; attempt < options.budget; ++attempt, k *= 2) {
    IntPolynomial target = IntPolynomial::monomial(0);
    for (int i = 1; i <= g; ++i) {
      target = target * IntPolynomial(std::vector<BigInt>{-modulus * k * i, BigInt(1)});
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(g) + 1);
    for (int i = 0; i < g; ++i) {
      coeffs[static_cast<std::size_t>(i)] = target.coeff(i) + centered_mod(p0.coeff(i) - target.coeff(i), modulus);
    }
    coeffs.back() = 1;
    IntPolynomial candidate(std::move(coeffs));
    int real_roots = 0;
    try {
      real_roots = sturm_real_roots(candidate);
    } catch (const NotSquarefree&) {
      continue;
    }
    if (real_roots != g) continue;
    field.poly = std::move(candidate);
    field.spread = k;
    field.certificates = compute_certificates(field);
    if (!certificates_pass(field)) throw Error("forged polynomial failed its own certificates");
    return field;
  }
  throw CapExceeded("spread escalation budget of " + std::to_string(options.budget) + " exhausted");
}

}  // namespace weiltate
