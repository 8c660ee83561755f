#include "weiltate/prime_field_poly.hpp"

#include <utility>

#include "weiltate/errors.hpp"

namespace weiltate {

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeFieldPoly::PrimeFieldPoly(std::uint32_t modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= modulus_;
  normalize();
}

PrimeFieldPoly PrimeFieldPoly::reduce(const IntPolynomial& f, std::uint32_t modulus) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  BigInt m(modulus);
  for (const auto& a : f.coeffs()) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    c.push_back(r.get_ui());
  }
  return PrimeFieldPoly(modulus, std::move(c));
}

PrimeFieldPoly PrimeFieldPoly::x(std::uint32_t modulus) { return PrimeFieldPoly(modulus, {0, 1}); }

PrimeFieldPoly PrimeFieldPoly::constant(std::uint32_t modulus, std::uint64_t c) {
  return PrimeFieldPoly(modulus, {c});
}

void PrimeFieldPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t PrimeFieldPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::uint64_t PrimeFieldPoly::inv(std::uint64_t a) const {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % modulus_, e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return result;
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  if (is_zero()) return *this;
  std::uint64_t li = inv(leading());
  std::vector<std::uint64_t> c(coeffs_);
  for (auto& v : c) v = v * li % modulus_;
  return PrimeFieldPoly(modulus_, std::move(c));
}

PrimeFieldPoly PrimeFieldPoly::derivative() const {
  if (degree() < 1) return PrimeFieldPoly(modulus_);
  std::vector<std::uint64_t> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * (i % modulus_) % modulus_;
  return PrimeFieldPoly(modulus_, std::move(d));
}

std::uint64_t PrimeFieldPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= modulus_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % modulus_;
  return acc;
}

PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.modulus_;
  }
  return PrimeFieldPoly(a.modulus_, std::move(c));
}

PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (a.coeff(static_cast<int>(i)) + a.modulus_ - b.coeff(static_cast<int>(i))) % a.modulus_;
  }
  return PrimeFieldPoly(a.modulus_, std::move(c));
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return PrimeFieldPoly(a.modulus_);
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = (c[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.modulus_;
    }
  }
  return PrimeFieldPoly(a.modulus_, std::move(c));
}

void PrimeFieldPoly::divmod(const PrimeFieldPoly& divisor, PrimeFieldPoly& quotient,
                            PrimeFieldPoly& remainder) const {
  if (divisor.is_zero()) throw HypothesisError("polynomial division by zero");
  std::vector<std::uint64_t> r(coeffs_);
  int dd = divisor.degree();
  std::uint64_t li = inv(divisor.leading());
  std::vector<std::uint64_t> q(degree() >= dd ? static_cast<std::size_t>(degree() - dd + 1) : 0, 0);
  for (int i = degree(); i >= dd; --i) {
    std::uint64_t c = r[static_cast<std::size_t>(i)] * li % modulus_;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - dd + j)];
      slot = (slot + modulus_ - c * divisor.coeffs_[static_cast<std::size_t>(j)] % modulus_) % modulus_;
    }
  }
  quotient = PrimeFieldPoly(modulus_, std::move(q));
  remainder = PrimeFieldPoly(modulus_, std::move(r));
}

PrimeFieldPoly PrimeFieldPoly::operator%(const PrimeFieldPoly& divisor) const {
  PrimeFieldPoly q(modulus_), r(modulus_);
  divmod(divisor, q, r);
  return r;
}

PrimeFieldPoly PrimeFieldPoly::operator/(const PrimeFieldPoly& divisor) const {
  PrimeFieldPoly q(modulus_), r(modulus_);
  divmod(divisor, q, r);
  return q;
}

PrimeFieldPoly PrimeFieldPoly::gcd(PrimeFieldPoly a, PrimeFieldPoly b) {
  while (!b.is_zero()) {
    PrimeFieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PrimeFieldPoly PrimeFieldPoly::powmod(const PrimeFieldPoly& base, const BigInt& e,
                                      const PrimeFieldPoly& m) {
  PrimeFieldPoly result = constant(m.modulus_, 1) % m;
  PrimeFieldPoly b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

IntPolynomial PrimeFieldPoly::lift() const {
  std::vector<BigInt> c;
  c.reserve(coeffs_.size());
  for (auto v : coeffs_) c.emplace_back(static_cast<unsigned long>(v));
  return IntPolynomial(std::move(c));
}

std::string PrimeFieldPoly::to_string() const {
  return lift().to_string() + " (mod " + std::to_string(modulus_) + ")";
}

}  // namespace weiltate
