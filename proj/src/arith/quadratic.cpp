#include "knotarith/arith/quadratic.hpp"

#include "knotarith/bigint.hpp"
#include "knotarith/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <vector>

namespace knotarith::arith {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

void require_odd_prime(long long p) {
  if (p == 2 || !is_prime(p)) throw NotOddPrime(std::to_string(p));
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

int legendre(long long a, long long p) {
  require_odd_prime(p);
  const BigInt x = boost::multiprecision::powm(BigInt(mod(a, p)), BigInt((p - 1) / 2), BigInt(p));
  if (x == 0) return 0;
  return x == 1 ? 1 : -1;
}

ReciprocityCheck reciprocity_check(long long p, long long q) {
  require_odd_prime(p);
  require_odd_prime(q);
  if (p == q) throw EqualPrimes();
  ReciprocityCheck c;
  c.p = p;
  c.q = q;
  c.p_over_q = legendre(p, q);
  c.q_over_p = legendre(q, p);
  c.sign = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
  return c;
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: break;
  }
  return "ramified";
}

long long field_discriminant(long long d) { return mod(d, 4) == 1 ? d : 4 * d; }

SplittingReport split_prime(long long d, long long p) {
  if (d == 0 || d == 1) throw NotSquarefree(std::to_string(d));
  for (long long k = 2; k * k <= (d < 0 ? -d : d); ++k)
    if (d % (k * k) == 0) throw NotSquarefree(std::to_string(d));
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");

  // Monic x^2 + b x + c over F_p.
  const long long b = mod(d, 4) == 1 ? -1 : 0;
  const long long c = mod(d, 4) == 1 ? (1 - d) / 4 : -d;
  std::vector<long long> roots;
  for (long long x = 0; x < p; ++x)
    if (mod(mod(x * x, p) + mod(b * x, p) + mod(c, p), p) == 0) roots.push_back(x);
  // A single root of a monic quadratic over F_p is a double root.
  SplittingReport out;
  out.d = d;
  out.p = p;
  if (roots.size() == 2) {
    out.type = SplitType::Split;
    out.e = 1, out.f = 1, out.r = 2;
  } else if (roots.size() == 1) {
    out.type = SplitType::Ramified;
    out.e = 2, out.f = 1, out.r = 1;
  } else {
    out.type = SplitType::Inert;
    out.e = 1, out.f = 2, out.r = 1;
  }
  return out;
}

}  // namespace knotarith::arith
