#pragma once

#include <string>

namespace knotarith::arith {

/// Trial division.
bool is_prime(long long n);

/// Legendre symbol (a / p) by Euler's criterion a^((p-1)/2) mod p.
/// Throws NotOddPrime.
int legendre(long long a, long long p);

struct ReciprocityCheck {
  long long p = 0;
  long long q = 0;
  int p_over_q = 0;
  int q_over_p = 0;
  int sign = 0;  // (-1)^((p-1)(q-1)/4)
  bool holds() const noexcept { return p_over_q * q_over_p == sign; }
};

/// (p / q)(q / p) against (-1)^((p-1)(q-1)/4). Throws NotOddPrime or EqualPrimes.
ReciprocityCheck reciprocity_check(long long p, long long q);

enum class SplitType { Split, Inert, Ramified };
std::string to_string(SplitType t);

/// Decomposition of p in the ring of integers of Q(sqrt d): p O = (Q_1 ... Q_r)^e
/// with residue degree f, so that e f r = 2.
struct SplittingReport {
  long long d = 0;
  long long p = 0;
  SplitType type = SplitType::Inert;
  int e = 1;
  int f = 2;
  int r = 1;
};

/// d if d = 1 mod 4, else 4d.
long long field_discriminant(long long d);

/// Factors the minimal polynomial of the integral generator (x^2 - d, or
/// x^2 - x + (1 - d)/4 when d = 1 mod 4) over F_p. Throws NotSquarefree for
/// d not squarefree or d in {0, 1}, NotPrime for p not prime.
SplittingReport split_prime(long long d, long long p);

}  // namespace knotarith::arith
