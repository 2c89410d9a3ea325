#include "knotarith/arith/cyclotomic.hpp"
#include "knotarith/arith/quadratic.hpp"
#include "knotarith/errors.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

using namespace knotarith;
using namespace knotarith::arith;

namespace {

std::vector<long long> odd_primes_below(long long n) {
  std::vector<long long> out;
  for (long long p = 3; p < n; p += 2) {
    bool prime = true;
    for (long long k = 3; k * k <= p; k += 2) prime = prime && p % k != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

// Legendre symbol from the set of nonzero squares.
int legendre_by_squares(long long a, long long p) {
  const long long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  std::set<long long> squares;
  for (long long x = 1; x < p; ++x) squares.insert(x * x % p);
  return squares.count(r) ? 1 : -1;
}

}  // namespace

TEST_CASE("Legendre symbol examples and errors", "[arith]") {
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(14, 7) == 0);
  for (long long p : odd_primes_below(60)) CHECK(legendre(1, p) == 1);
  CHECK_THROWS_AS(legendre(1, 2), NotOddPrime);
  CHECK_THROWS_AS(legendre(1, 9), NotOddPrime);
  CHECK_THROWS_AS(legendre(1, -3), NotOddPrime);
}

TEST_CASE("Legendre symbol matches the squares oracle", "[arith][property]") {
  for (long long p : odd_primes_below(200))
    for (long long a = -p; a <= 2 * p; ++a) CHECK(legendre(a, p) == legendre_by_squares(a, p));
}

TEST_CASE("Legendre symbol is completely multiplicative", "[arith][property]") {
  std::mt19937 rng(7);
  const auto primes = odd_primes_below(200);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<long long> value(-1000, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const long long p = primes[pick(rng)], a = value(rng), b = value(rng);
    CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
  }
}

TEST_CASE("quadratic reciprocity for odd primes below 200", "[arith]") {
  CHECK(reciprocity_check(3, 5).holds());
  CHECK(reciprocity_check(3, 7).p_over_q == -1);
  CHECK(reciprocity_check(3, 7).q_over_p == 1);
  CHECK(reciprocity_check(3, 7).sign == -1);
  const auto primes = odd_primes_below(200);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const long long p = primes[i], q = primes[j];
      const ReciprocityCheck c = reciprocity_check(p, q);
      CHECK(c.holds());
      CHECK(c.p_over_q == legendre_by_squares(p, q));
      CHECK(c.q_over_p == legendre_by_squares(q, p));
      CHECK(c.sign == (std::lround(std::pow(-1.0, static_cast<double>((p - 1) * (q - 1) / 4)))));
    }
  CHECK_THROWS_AS(reciprocity_check(5, 5), EqualPrimes);
  CHECK_THROWS_AS(reciprocity_check(2, 5), NotOddPrime);
}

TEST_CASE("cyclotomic integer arithmetic", "[arith]") {
  for (long long q : {3, 5, 7}) {
    CHECK(CycloInt::zeta_power(q, 1).pow(q) == CycloInt::constant(q, 1));
    CHECK(CycloInt::zeta_power(q, q + 2) == CycloInt::zeta_power(q, 2));
    CHECK(CycloInt::zeta_power(q, -1) * CycloInt::zeta_power(q, 1) == CycloInt::constant(q, 1));
    // 1 + zeta + ... + zeta^(q-1) = 0
    CycloInt s(q);
    for (long long k = 0; k < q; ++k) s = s + CycloInt::zeta_power(q, k);
    CHECK(s == CycloInt(q));
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  const auto random_element = [&](long long q) {
    CycloInt x(q);
    for (long long k = 0; k < q; ++k) x = x + CycloInt::constant(q, c(rng)) * CycloInt::zeta_power(q, k);
    return x;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const CycloInt a = random_element(7), b = random_element(7), d = random_element(7);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
  }
  CHECK_THROWS_AS(CycloInt(9), NotOddPrime);
  CHECK(CycloInt::constant(3, 1).to_string() == "1");
}

TEST_CASE("Gauss sums square to the signed prime", "[arith]") {
  const GaussSumReport three = gauss_sum_square(3);
  CHECK(three.g.to_string() == "1 + 2z");
  CHECK(three.g_squared == CycloInt::constant(3, -3));
  CHECK(gauss_sum_square(5).g_squared == CycloInt::constant(5, 5));
  for (long long q : {3, 5, 7, 11, 13, 17}) {
    const GaussSumReport r = gauss_sum_square(q);
    CHECK(r.holds());
    CHECK(r.expected == (q % 4 == 1 ? q : -q));
    // Floating-point evaluation at zeta = exp(2 pi i / q).
    std::complex<double> g = 0;
    for (long long x = 0; x < q; ++x) g += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(x * x % q) / static_cast<double>(q));
    CHECK(std::abs(g * g - std::complex<double>(static_cast<double>(r.expected.convert_to<long long>()), 0)) < 1e-9);
  }
  CHECK_THROWS_AS(gauss_sum_square(2), NotOddPrime);
  CHECK_THROWS_AS(gauss_sum_square(15), NotOddPrime);
}

TEST_CASE("Gauss sum power congruence", "[arith]") {
  for (long long q : {3, 5, 7, 11, 13})
    for (long long p : odd_primes_below(60))
      if (p != q) CHECK(gauss_sum_congruence(q, p));
  CHECK_THROWS_AS(gauss_sum_congruence(5, 5), EqualPrimes);
}

TEST_CASE("splitting in the Gaussian integers", "[arith]") {
  const SplittingReport two = split_prime(-1, 2);
  CHECK(two.type == SplitType::Ramified);
  CHECK((two.e == 2 && two.f == 1 && two.r == 1));
  const SplittingReport five = split_prime(-1, 5);
  CHECK(five.type == SplitType::Split);
  CHECK((five.e == 1 && five.f == 1 && five.r == 2));
  const SplittingReport seven = split_prime(-1, 7);
  CHECK(seven.type == SplitType::Inert);
  CHECK((seven.e == 1 && seven.f == 2 && seven.r == 1));
  for (long long p = 2; p < 500; ++p) {
    if (!is_prime(p)) continue;
    const SplitType expected = p == 2 ? SplitType::Ramified : p % 4 == 1 ? SplitType::Split : SplitType::Inert;
    CHECK(split_prime(-1, p).type == expected);
  }
}

TEST_CASE("splitting matches the discriminant rule", "[arith][property]") {
  for (long long d = -50; d <= 50; ++d) {
    bool squarefree = d != 0 && d != 1;
    for (long long k = 2; k * k <= std::abs(d); ++k) squarefree = squarefree && d % (k * k) != 0;
    if (!squarefree) {
      CHECK_THROWS_AS(split_prime(d, 3), NotSquarefree);
      continue;
    }
    const long long disc = field_discriminant(d);
    for (long long p = 2; p < 500; ++p) {
      if (!is_prime(p)) continue;
      SplitType expected;
      if (disc % p == 0) {
        expected = SplitType::Ramified;
      } else if (p == 2) {
        expected = ((d % 8) + 8) % 8 == 1 ? SplitType::Split : SplitType::Inert;
      } else {
        expected = legendre_by_squares(d, p) == 1 ? SplitType::Split : SplitType::Inert;
      }
      const SplittingReport r = split_prime(d, p);
      INFO("d=" << d << " p=" << p);
      CHECK(r.type == expected);
      CHECK(r.e * r.f * r.r == 2);
    }
  }
  CHECK_THROWS_AS(split_prime(-1, 9), NotPrime);
  CHECK_THROWS_AS(split_prime(-1, 1), NotPrime);
  CHECK_THROWS_AS(split_prime(0, 3), NotSquarefree);
  CHECK(to_string(SplitType::Ramified) == "ramified");
}
