#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "weiltate/errors.hpp"
#include "weiltate/int_poly.hpp"
#include "weiltate/poly_services.hpp"
#include "weiltate/prime_field_poly.hpp"
#include "weiltate/rational.hpp"

using namespace weiltate;

namespace {

// Brute-force degree pattern for deg f <= 4: the smallest-degree monic
// divisor is irreducible, and a reducible polynomial of degree <= 4 has a
// factor of degree <= 2.
DegreePattern brute_pattern(PrimeFieldPoly f) {
  const std::uint32_t p = f.modulus();
  f = f.monic();
  std::map<int, int> counts;
  std::vector<PrimeFieldPoly> factors;
  while (f.degree() > 0) {
    bool found = false;
    for (int d = 1; d <= 2 && !found && 2 * d <= f.degree(); ++d) {
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= p;
      for (std::uint64_t code = 0; code < total && !found; ++code) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
        std::uint64_t x = code;
        for (int i = 0; i < d; ++i) {
          c[static_cast<std::size_t>(i)] = x % p;
          x /= p;
        }
        c[static_cast<std::size_t>(d)] = 1;
        PrimeFieldPoly q(p, c);
        if ((f % q).is_zero()) {
          factors.push_back(q);
          f = f / q;
          found = true;
        }
      }
    }
    if (!found) {
      factors.push_back(f);
      break;
    }
  }
  DegreePattern out;
  for (const auto& q : factors) counts[q.degree()]++;
  for (auto [d, n] : counts) out.parts.emplace_back(d, n);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i] == factors[j]) out.squarefree = false;
    }
  }
  return out;
}

}  // namespace

TEST(Rational, CanonicalFormAndParsing) {
  EXPECT_EQ(to_string(make_rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(make_rational(-3, -6)), "1/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_EQ(to_string(make_rational(0, 5)), "0");
  EXPECT_EQ(parse_rational(" -6/8 "), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("7"), make_rational(7));
  EXPECT_THROW(parse_rational("1/0"), HypothesisError);
  EXPECT_THROW(parse_rational("1/x"), HypothesisError);
  EXPECT_THROW(parse_rational(""), HypothesisError);
}

TEST(Rational, FracAndLcm) {
  EXPECT_EQ(frac(make_rational(7, 4)), make_rational(3, 4));
  EXPECT_EQ(frac(make_rational(-1, 4)), make_rational(3, 4));
  EXPECT_EQ(frac(make_rational(2)), make_rational(0));
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), BigInt(12));
  EXPECT_THROW(to_int64(BigInt("100000000000000000000")), CapExceeded);
}

TEST(IntPolynomial, ArithmeticAndPrinting) {
  IntPolynomial f{1, 0, 1};  // x^2 + 1
  IntPolynomial g{-1, 1};    // x - 1
  EXPECT_EQ((f * g).to_string(), "x^3 - x^2 + x - 1");
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_EQ(f.derivative(), (IntPolynomial{0, 2}));
  EXPECT_EQ(f.evaluate(BigInt(3)), BigInt(10));
  EXPECT_EQ(f.evaluate(make_rational(1, 2)), make_rational(5, 4));
  EXPECT_EQ(g.translate(BigInt(1)), (IntPolynomial{0, 1}));
  EXPECT_EQ((IntPolynomial{2, 5, 1}).to_string(), "x^2 + 5*x + 2");
}

TEST(PrimeFieldPoly, DivisionAndGcd) {
  auto f = PrimeFieldPoly::reduce(IntPolynomial{-1, 0, 1}, 5);  // x^2 - 1
  auto g = PrimeFieldPoly::reduce(IntPolynomial{-1, 1}, 5);     // x - 1
  EXPECT_TRUE((f % g).is_zero());
  EXPECT_EQ(f / g, PrimeFieldPoly::reduce(IntPolynomial{1, 1}, 5));
  EXPECT_EQ(PrimeFieldPoly::gcd(f, g), g);
  EXPECT_TRUE(is_small_prime(13));
  EXPECT_FALSE(is_small_prime(1));
  EXPECT_FALSE(is_small_prime(91));
}

TEST(FactorDegreePattern, Examples) {
  auto a = factor_degree_pattern(IntPolynomial{1, 0, 1}, 5);
  EXPECT_EQ(a.parts, (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_TRUE(a.squarefree);
  auto b = factor_degree_pattern(IntPolynomial{1, 0, 1}, 3);
  EXPECT_EQ(b.parts, (std::vector<std::pair<int, int>>{{2, 1}}));
  EXPECT_TRUE(b.squarefree);
  auto c = factor_degree_pattern(IntPolynomial{0, 1}, 7);
  EXPECT_EQ(c.parts, (std::vector<std::pair<int, int>>{{1, 1}}));
}

TEST(FactorDegreePattern, RepeatedFactorsAreCounted) {
  // (x - 1)^2 (x^2 + 1) mod 3
  IntPolynomial f = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{1, 0, 1};
  auto pat = factor_degree_pattern(f, 3);
  EXPECT_FALSE(pat.squarefree);
  EXPECT_EQ(pat.count(1), 2);
  EXPECT_EQ(pat.count(2), 1);
  EXPECT_EQ(pat.total_degree(), 4);
}

TEST(FactorDegreePattern, AgreesWithTrialDivisionOracle) {
  std::mt19937_64 rng(20240611);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int deg = 1; deg <= 4; ++deg) {
      for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = rng() % p;
        c.back() = 1;
        PrimeFieldPoly f(p, c);
        EXPECT_EQ(factor_degree_pattern(f), brute_pattern(f)) << f.to_string() << " mod " << p;
      }
    }
  }
}

TEST(CountDistinctRoots, Examples) {
  EXPECT_EQ(count_distinct_roots_mod(IntPolynomial{-1, 0, 1}, 5), 2);
  EXPECT_EQ(count_distinct_roots_mod(IntPolynomial{1, 0, 1}, 3), 0);
  EXPECT_EQ(count_distinct_roots_mod(IntPolynomial{0, -1, 0, 1}, 3), 3);
}

TEST(CountDistinctRoots, AgreesWithExhaustiveEvaluation) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<BigInt> c(5);
      for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
      c.back() = 1;
      IntPolynomial f(c);
      auto fp = PrimeFieldPoly::reduce(f, p);
      int roots = 0;
      for (std::uint64_t x = 0; x < p; ++x) roots += fp.evaluate(x) == 0;
      EXPECT_EQ(count_distinct_roots_mod(f, p), roots);
    }
  }
}

TEST(SturmRealRoots, Examples) {
  EXPECT_EQ(sturm_real_roots(IntPolynomial{-2, 0, 1}), 2);
  EXPECT_EQ(sturm_real_roots(IntPolynomial{1, 0, 1}), 0);
  EXPECT_EQ(sturm_real_roots(IntPolynomial{0, -3, 0, 1}), 3);
  EXPECT_THROW(sturm_real_roots(IntPolynomial{1, 2, 1}), NotSquarefree);
}

TEST(SturmRealRoots, MatchesConstructedRootCounts) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int linear = static_cast<int>(rng() % 5);
    const int quadratic = static_cast<int>(rng() % 3);
    std::vector<long> roots;
    while (static_cast<int>(roots.size()) < linear) {
      long r = static_cast<long>(rng() % 61) - 30;
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    IntPolynomial f{1};
    for (long r : roots) f = f * IntPolynomial{-r, 1};
    // x^2 + c for distinct c >= 1
    const long c0 = static_cast<long>(rng() % 9) + 1;
    for (int i = 0; i < quadratic; ++i) f = f * IntPolynomial{c0 + 10 * i, 0, 1};
    if (f.degree() == 0) continue;
    EXPECT_EQ(sturm_real_roots(f), linear) << f.to_string();
  }
}

TEST(SturmRealRoots, SignChangesOnAGrid) {
  // x^4 - 10x^2 + 1 has roots near +-0.32 and +-3.15.
  IntPolynomial f{1, 0, -10, 0, 1};
  int changes = 0;
  BigRational prev = f.evaluate(make_rational(-5));
  for (int k = -49; k <= 50; ++k) {
    BigRational v = f.evaluate(make_rational(k, 10));
    if (sgn(v) != 0 && sgn(v) != sgn(prev)) ++changes;
    if (sgn(v) != 0) prev = v;
  }
  EXPECT_EQ(changes, 4);
  EXPECT_EQ(sturm_real_roots(f), 4);
}

TEST(CrtPoly, Examples) {
  EXPECT_EQ(crt_poly({{BigInt(2), IntPolynomial{0, 1}}, {BigInt(3), IntPolynomial{1, 1}}}, 1), (IntPolynomial{4, 1}));
  EXPECT_EQ(crt_poly({{BigInt(5), IntPolynomial{1, 0, 1}}}, 2), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(crt_poly({{BigInt(2), IntPolynomial{0, 1, 1}}, {BigInt(5), IntPolynomial{2, 0, 1}}}, 2),
            (IntPolynomial{2, 5, 1}));
}

TEST(CrtPoly, ReconstructsReducedCoefficients) {
  std::mt19937_64 rng(3);
  const std::vector<long> moduli{7, 11, 13};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> c(5);
    for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = static_cast<long>(rng() % 1001);
    c[4] = 1;
    IntPolynomial f(c);
    std::vector<CrtConstraint> cons;
    for (long m : moduli) {
      cons.push_back({BigInt(m), PrimeFieldPoly::reduce(f, static_cast<std::uint32_t>(m)).lift()});
    }
    EXPECT_EQ(crt_poly(cons, 4), f);
  }
}
