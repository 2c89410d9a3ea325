#include "knotarith/arith/cyclotomic.hpp"

#include "knotarith/arith/quadratic.hpp"
#include "knotarith/errors.hpp"

#include <sstream>

namespace knotarith::arith {

CycloInt::CycloInt(long long q) : q_(q), c_(static_cast<std::size_t>(q - 1), BigInt(0)) {
  if (q < 3 || !is_prime(q)) throw NotOddPrime(std::to_string(q));
}

CycloInt::CycloInt(long long q, std::vector<BigInt> coefficients) : q_(q), c_(std::move(coefficients)) {}

std::vector<BigInt> CycloInt::reduce(std::vector<BigInt> v) {
  // zeta^(q-1) = -(1 + zeta + ... + zeta^(q-2)).
  const BigInt top = v.back();
  v.pop_back();
  for (auto& x : v) x -= top;
  return v;
}

CycloInt CycloInt::constant(long long q, const BigInt& c) {
  CycloInt z(q);
  z.c_[0] = c;
  return z;
}

CycloInt CycloInt::zeta_power(long long q, long long k) {
  CycloInt z(q);
  std::vector<BigInt> v(static_cast<std::size_t>(q), BigInt(0));
  v[static_cast<std::size_t>(((k % q) + q) % q)] = 1;
  z.c_ = reduce(std::move(v));
  return z;
}

bool CycloInt::is_constant() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloInt operator+(const CycloInt& a, const CycloInt& b) {
  if (a.q_ != b.q_) throw ValidationError("cyclotomic elements of different levels");
  CycloInt r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  if (a.q_ != b.q_) throw ValidationError("cyclotomic elements of different levels");
  const auto q = static_cast<std::size_t>(a.q_);
  std::vector<BigInt> v(q, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[(i + j) % q] += a.c_[i] * b.c_[j];
  }
  return CycloInt(a.q_, CycloInt::reduce(std::move(v)));
}

CycloInt CycloInt::mod(const BigInt& m) const {
  CycloInt r = *this;
  for (auto& x : r.c_) x = ((x % m) + m) % m;
  return r;
}

CycloInt CycloInt::pow(long long n) const {
  CycloInt result = constant(q_, 1), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    base = base * base;
  }
  return result;
}

std::string CycloInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    const BigInt a = c < 0 ? BigInt(-c) : c;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || a != 1) out << a.str();
    if (i > 0) out << "z";
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

GaussSumReport gauss_sum_square(long long q) {
  GaussSumReport r;
  r.q = q;
  r.g = CycloInt(q);
  for (long long x = 0; x < q; ++x) r.g = r.g + CycloInt::zeta_power(q, x * x % q);
  r.g_squared = r.g * r.g;
  r.expected = ((q - 1) / 2) % 2 == 0 ? BigInt(q) : BigInt(-q);
  return r;
}

bool gauss_sum_congruence(long long q, long long p) {
  if (p == 2 || !is_prime(p)) throw NotOddPrime(std::to_string(p));
  if (p == q) throw EqualPrimes();
  const GaussSumReport r = gauss_sum_square(q);
  // Reduce after every product to keep coefficients small.
  CycloInt power = CycloInt::constant(q, 1), base = r.g.mod(p);
  for (long long n = p - 1; n > 0; n >>= 1) {
    if (n & 1) power = (power * base).mod(p);
    base = (base * base).mod(p);
  }
  const long long q_star = ((q - 1) / 2) % 2 == 0 ? q : -q;
  return power == CycloInt::constant(q, legendre(q_star, p)).mod(p);
}

}  // namespace knotarith::arith
