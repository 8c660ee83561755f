#include "weiltate/poly_services.hpp"

#include <map>
#include <sstream>

#include "weiltate/errors.hpp"

namespace weiltate {

int DegreePattern::total_degree() const {
  int total = 0;
  for (auto [d, c] : parts) total += d * c;
  return total;
}

int DegreePattern::count(int degree) const {
  for (auto [d, c] : parts) {
    if (d == degree) return c;
  }
  return 0;
}

std::string DegreePattern::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ", ";
    os << "(" << parts[i].first << "," << parts[i].second << ")";
  }
  os << "]" << (squarefree ? " squarefree" : " not squarefree");
  return os.str();
}

namespace {

void check_modulus(std::uint32_t ell) {
  if (ell >= (1u << 31) || !is_small_prime(ell)) {
    throw HypothesisError("modulus " + std::to_string(ell) + " is not a prime below 2^31");
  }
}

PrimeFieldPoly reduce_checked(const IntPolynomial& f, std::uint32_t ell) {
  check_modulus(ell);
  if (f.is_zero()) throw HypothesisError("zero polynomial");
  PrimeFieldPoly r = PrimeFieldPoly::reduce(f, ell);
  if (r.degree() != f.degree()) {
    throw HypothesisError("leading coefficient vanishes mod " + std::to_string(ell));
  }
  return r;
}

// f(x) = h(x^p) -> h(x); valid because a^p = a in F_p.
PrimeFieldPoly pth_root(const PrimeFieldPoly& f) {
  const std::uint32_t p = f.modulus();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c[static_cast<std::size_t>(i) / p] = f.coeff(i);
  return PrimeFieldPoly(p, std::move(c));
}

// Squarefree decomposition of a monic polynomial: (factor, multiplicity).
void squarefree_parts(const PrimeFieldPoly& f, int mult,
                      std::vector<std::pair<PrimeFieldPoly, int>>& out) {
  if (f.degree() < 1) return;
  const int p = static_cast<int>(f.modulus());
  PrimeFieldPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), mult * p, out);
    return;
  }
  PrimeFieldPoly c = PrimeFieldPoly::gcd(f, d);
  PrimeFieldPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PrimeFieldPoly y = PrimeFieldPoly::gcd(w, c);
    PrimeFieldPoly fac = (w / y).monic();
    if (fac.degree() > 0) out.emplace_back(fac, i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c.monic()), mult * p, out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
void distinct_degree(const PrimeFieldPoly& f, int mult, std::map<int, int>& parts) {
  const std::uint32_t p = f.modulus();
  const PrimeFieldPoly x = PrimeFieldPoly::x(p);
  PrimeFieldPoly rest = f;
  PrimeFieldPoly h = x % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = PrimeFieldPoly::powmod(h, BigInt(p), rest);
    PrimeFieldPoly g = PrimeFieldPoly::gcd(rest, h - x);
    if (g.degree() > 0) {
      parts[d] += mult * (g.degree() / d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) parts[rest.degree()] += mult;
}

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& f) {
  RatPoly out;
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return out;
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    BigRational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

int rat_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

int sign_of(const BigRational& q) { return sgn(q); }

}  // namespace

DegreePattern factor_degree_pattern(const PrimeFieldPoly& f) {
  check_modulus(f.modulus());
  if (f.is_zero()) throw HypothesisError("zero polynomial");
  std::vector<std::pair<PrimeFieldPoly, int>> sqf;
  squarefree_parts(f.monic(), 1, sqf);
  std::map<int, int> parts;
  DegreePattern pattern;
  for (const auto& [fac, mult] : sqf) {
    if (mult > 1) pattern.squarefree = false;
    distinct_degree(fac, mult, parts);
  }
  for (auto [d, c] : parts) pattern.parts.emplace_back(d, c);
  return pattern;
}

DegreePattern factor_degree_pattern(const IntPolynomial& f, std::uint32_t ell) {
  return factor_degree_pattern(reduce_checked(f, ell));
}

int count_distinct_roots_mod(const IntPolynomial& f, std::uint32_t ell) {
  PrimeFieldPoly r = reduce_checked(f, ell).monic();
  if (r.degree() == 0) return 0;
  const PrimeFieldPoly x = PrimeFieldPoly::x(ell);
  PrimeFieldPoly xp = PrimeFieldPoly::powmod(x, BigInt(ell), r);
  return PrimeFieldPoly::gcd(r, xp - x).degree();
}

int sturm_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw HypothesisError("zero polynomial");
  if (f.degree() == 0) return 0;

  RatPoly p0 = to_rat(f);
  RatPoly p1 = to_rat(f.derivative());

  // gcd(f, f') over Q must be constant.
  {
    RatPoly a = p0, b = p1;
    while (!b.empty()) {
      RatPoly r = rat_rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (rat_degree(a) > 0) throw NotSquarefree("polynomial " + f.to_string() + " is not squarefree");
  }

  std::vector<RatPoly> chain{p0, p1};
  while (true) {
    RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  auto variations = [&](bool at_plus_infinity) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
      int s = sign_of(p.back());
      if (!at_plus_infinity && rat_degree(p) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  return variations(false) - variations(true);
}

IntPolynomial crt_poly(const std::vector<CrtConstraint>& constraints, int degree) {
  if (degree < 0) throw HypothesisError("negative degree");
  if (constraints.empty()) throw HypothesisError("no CRT constraints");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    if (c.modulus < 2) throw HypothesisError("CRT modulus must be >= 2");
    if (c.residue.degree() > degree) {
      throw HypothesisError("residue " + c.residue.to_string() + " exceeds degree " +
                            std::to_string(degree));
    }
    BigInt lead;
    BigInt raw = c.residue.coeff(degree);
    mpz_fdiv_r(lead.get_mpz_t(), raw.get_mpz_t(), c.modulus.get_mpz_t());
    if (lead != 1) {
      throw HypothesisError("residue " + c.residue.to_string() + " is not monic of degree " +
                            std::to_string(degree) + " mod " + c.modulus.get_str());
    }
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), c.modulus.get_mpz_t(), constraints[j].modulus.get_mpz_t());
      if (g != 1) {
        throw HypothesisError("CRT moduli " + c.modulus.get_str() + " and " +
                              constraints[j].modulus.get_str() + " are not coprime");
      }
    }
  }

  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, BigInt(0));
  coeffs.back() = 1;
  for (int k = 0; k < degree; ++k) {
    BigInt value = 0, modulus = 1;
    for (const auto& c : constraints) {
      BigInt target;
      BigInt raw = c.residue.coeff(k);
      mpz_fdiv_r(target.get_mpz_t(), raw.get_mpz_t(), c.modulus.get_mpz_t());
      BigInt inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), c.modulus.get_mpz_t());
      BigInt t = (target - value) * inv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), c.modulus.get_mpz_t());
      value += modulus * t;
      modulus *= c.modulus;
    }
    coeffs[static_cast<std::size_t>(k)] = value;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace weiltate
