#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/knots/wirtinger.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotarith::fox {

/// Polynomial in Z[t]; coefficient i multiplies t^i. No trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long c);
  explicit IntPoly(std::vector<BigInt> coefficients);
  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long long degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
  const BigInt& leading() const { return c_.back(); }
  BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  BigInt evaluate(const BigInt& x) const;

  /// gcd of the coefficients (nonnegative).
  BigInt content() const;

  IntPoly& operator+=(const IntPoly& x);
  IntPoly& operator-=(const IntPoly& x);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  /// Exact quotient a / b; throws std::domain_error if b does not divide a in Z[t].
  static IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
  /// Exact quotient by an integer.
  IntPoly divided_by(const BigInt& d) const;
  /// gcd in Z[t], normalised to a positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Determinant of a square matrix over Z[t] by fraction-free elimination.
IntPoly determinant(std::vector<std::vector<IntPoly>> m);

/// Alexander polynomial, normalised to lowest exponent 0 and positive leading
/// coefficient; |Delta(1)| = 1 for a knot. The symmetric Laurent form is
/// t^{-degree/2} Delta(t).
struct AlexanderPolynomial {
  IntPoly poly;
  long long symmetric_shift() const noexcept { return -poly.degree() / 2; }
  std::string to_string() const { return poly.to_string(); }
};

/// gcd of the maximal nonvanishing minors of the abelianised Fox matrix
/// (every generator sent to t).
AlexanderPolynomial alexander_polynomial(const knots::WirtingerData& w);

/// |prod_{j=0}^{n-1} Delta(zeta_n^j)| computed as the determinant of the
/// circulant matrix of Delta mod t^n - 1.
BigInt cyclic_norm(const IntPoly& p, std::size_t n);

/// Order of the first homology of the n-fold cyclic branched cover predicted
/// by prod_{j=1}^{n-1} |Delta(zeta_n^j)|; nullopt when it is infinite.
std::optional<BigInt> branched_homology_order(const AlexanderPolynomial& delta, std::size_t n);

}  // namespace knotarith::fox
