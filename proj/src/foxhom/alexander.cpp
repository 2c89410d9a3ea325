#include "knotarith/foxhom/alexander.hpp"

#include "knotarith/foxhom/fox.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotarith::fox {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = p.divided_by(p.content());
  return q.leading() < 0 ? -q : q;
}

// Remainder of lc(b)^k a modulo b for a suitable k; same gcd with b up to content.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    a = IntPoly::monomial(0, b.leading()) * a - IntPoly::monomial(shift, a.leading()) * b;
  }
  return a;
}

}  // namespace

IntPoly::IntPoly(long long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

IntPoly::IntPoly(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = gcd_big(g, c);
  return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& x) {
  if (x.c_.size() > c_.size()) c_.resize(x.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) c_[i] += x.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& x) {
  if (x.c_.size() > c_.size()) c_.resize(x.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) c_[i] -= x.c_[i];
  trim();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  IntPoly r = a;
  std::vector<BigInt> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
                        BigInt(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    if (r.leading() % b.leading() != 0) throw std::domain_error("inexact polynomial division");
    const BigInt c = r.leading() / b.leading();
    q[shift] = c;
    r -= monomial(shift, c) * b;
  }
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

IntPoly IntPoly::divided_by(const BigInt& d) const {
  IntPoly r = *this;
  for (auto& c : r.c_) {
    if (c % d != 0) throw std::domain_error("inexact division by an integer");
    c /= d;
  }
  return r;
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return b.is_zero() || b.leading() > 0 ? b : -b;
  if (b.is_zero()) return a.leading() > 0 ? a : -a;
  const BigInt g = gcd_big(a.content(), b.content());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return IntPoly::monomial(0, g) * primitive_part(a);
}

std::string IntPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    const BigInt a = abs_big(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || a != 1) out << a.str();
    if (i > 0) out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

IntPoly determinant(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly(1);
  bool negate = false;
  IntPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = IntPoly::divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = IntPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

AlexanderPolynomial alexander_polynomial(const knots::WirtingerData& w) {
  const std::size_t d = w.presentation.num_generators();
  const auto& rel = w.presentation.relators();
  const GroupRingMatrix fox = fox_jacobian(rel, d);

  // Abelianise every generator to t and clear negative powers row by row.
  std::vector<std::vector<IntPoly>> a(rel.size(), std::vector<IntPoly>(d));
  for (std::size_t i = 0; i < rel.size(); ++i) {
    long long low = 0;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [word, c] : fox(i, j).terms()) low = std::min(low, word.exponent_sum());
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [word, c] : fox(i, j).terms())
        a[i][j] += IntPoly::monomial(static_cast<std::size_t>(word.exponent_sum() - low), c);
  }

  // (d-1)-minors: choose d-1 of the rows and drop one column.
  IntPoly g;
  const std::size_t k = d - 1;
  std::vector<bool> pick(rel.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(k, rel.size())), true);
  if (k <= rel.size()) {
    do {
      for (std::size_t drop = 0; drop < d; ++drop) {
        std::vector<std::vector<IntPoly>> minor;
        for (std::size_t i = 0; i < rel.size(); ++i) {
          if (!pick[i]) continue;
          std::vector<IntPoly> row;
          for (std::size_t j = 0; j < d; ++j)
            if (j != drop) row.push_back(a[i][j]);
          minor.push_back(std::move(row));
        }
        g = IntPoly::gcd(g, determinant(std::move(minor)));
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  // Strip powers of t.
  std::vector<BigInt> c = g.coefficients();
  const auto first = std::find_if(c.begin(), c.end(), [](const BigInt& x) { return x != 0; });
  c.erase(c.begin(), first);
  IntPoly p(std::move(c));
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return {p};
}

BigInt cyclic_norm(const IntPoly& p, std::size_t n) {
  if (n == 0) throw std::domain_error("cyclic_norm needs n >= 1");
  std::vector<BigInt> r(n, BigInt(0));
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) r[i % n] += p.coefficients()[i];
  std::vector<std::vector<IntPoly>> circ(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) circ[i][j] = IntPoly(std::vector<BigInt>{r[(j + n - i) % n]});
  const IntPoly det = determinant(std::move(circ));
  return abs_big(det[0]);
}

std::optional<BigInt> branched_homology_order(const AlexanderPolynomial& delta, std::size_t n) {
  const BigInt norm = cyclic_norm(delta.poly, n);
  if (norm == 0) return std::nullopt;
  const BigInt at_one = abs_big(delta.poly.evaluate(1));
  return norm / at_one;
}

}  // namespace knotarith::fox
