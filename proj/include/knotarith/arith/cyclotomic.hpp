#pragma once

#include "knotarith/bigint.hpp"

#include <string>
#include <vector>

namespace knotarith::arith {

/// Element of Z[zeta_q] = Z[x] / (Phi_q), q prime, stored in the basis
/// 1, zeta, ..., zeta^(q-2).
class CycloInt {
 public:
  explicit CycloInt(long long q);
  static CycloInt constant(long long q, const BigInt& c);
  /// zeta^k, any integer k.
  static CycloInt zeta_power(long long q, long long k);

  long long q() const noexcept { return q_; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_constant() const;

  friend CycloInt operator+(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  bool operator==(const CycloInt& o) const = default;

  /// Coefficients reduced into [0, m).
  CycloInt mod(const BigInt& m) const;
  CycloInt pow(long long n) const;
  /// "1 + 2z" with z = zeta_q.
  std::string to_string() const;

 private:
  CycloInt(long long q, std::vector<BigInt> coefficients);
  // Reduce a length-q vector modulo 1 + x + ... + x^(q-1).
  static std::vector<BigInt> reduce(std::vector<BigInt> v);

  long long q_;
  std::vector<BigInt> c_;
};

struct GaussSumReport {
  long long q = 0;
  CycloInt g{3};
  CycloInt g_squared{3};
  BigInt expected = 0;  // (-1)^((q-1)/2) q
  bool holds() const { return g_squared == CycloInt::constant(q, expected); }
};

/// g = sum over x in F_q of zeta_q^(x^2), squared exactly. Throws NotOddPrime.
GaussSumReport gauss_sum_square(long long q);

/// g^(p-1) = ((-1)^((q-1)/2) q / p) modulo p in Z[zeta_q], p an odd prime
/// different from q. Throws NotOddPrime or EqualPrimes.
bool gauss_sum_congruence(long long q, long long p);

}  // namespace knotarith::arith
