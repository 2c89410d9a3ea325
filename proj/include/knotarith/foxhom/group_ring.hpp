#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/errors.hpp"
#include "knotarith/fpgroup/word.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knotarith::fox {

/// Element of the integral group ring Z[F] of a free group. Words are freely
/// reduced and no zero coefficient is stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(long long c);  // c times the identity
  static GroupRingElement word(const fp::Word& w, const BigInt& coefficient = 1);

  const std::map<fp::Word, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Linear extension of g -> g^-1.
  GroupRingElement antipode() const;
  /// Sum of coefficients.
  BigInt augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& x);
  GroupRingElement& operator-=(const GroupRingElement& x);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement& a);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  bool operator==(const GroupRingElement&) const = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void add(const fp::Word& w, const BigInt& c);
  std::map<fp::Word, BigInt> terms_;
};

/// Element of Z[m^+-1, l^+-1], the group ring of the peripheral subgroup Z^2.
class LaurentBivar {
 public:
  LaurentBivar() = default;
  LaurentBivar(long long c);
  static LaurentBivar monomial(long long i, long long j, const BigInt& coefficient = 1);
  static LaurentBivar m() { return monomial(1, 0); }
  static LaurentBivar l() { return monomial(0, 1); }

  /// Exponent pair (i, j) of m^i l^j -> coefficient.
  const std::map<std::pair<long long, long long>, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// m^i l^j -> m^-i l^-j.
  LaurentBivar antipode() const;
  BigInt augmentation() const;
  /// Whether this element is +-m^i l^j, a unit of the ring.
  bool is_unit() const noexcept;

  LaurentBivar& operator+=(const LaurentBivar& x);
  LaurentBivar& operator-=(const LaurentBivar& x);
  friend LaurentBivar operator+(LaurentBivar a, const LaurentBivar& b) { return a += b; }
  friend LaurentBivar operator-(LaurentBivar a, const LaurentBivar& b) { return a -= b; }
  friend LaurentBivar operator-(const LaurentBivar& a);
  friend LaurentBivar operator*(const LaurentBivar& a, const LaurentBivar& b);
  bool operator==(const LaurentBivar&) const = default;

  std::string to_string() const;

 private:
  void add(std::pair<long long, long long> e, const BigInt& c);
  std::map<std::pair<long long, long long>, BigInt> terms_;
};

/// Dense matrix over a ring. Maps of free left modules act on row vectors
/// from the right, so x -> x M and the composite "first A, then B" is A * B.
template <typename R>
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RingMatrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  RingMatrix transpose() const {
    RingMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// (M^*)_{ij} = S(M_{ji}): the matrix of the twisted dual map.
  RingMatrix antipode_transpose() const {
    RingMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).antipode();
    return t;
  }

  /// Apply f to every entry.
  template <typename F>
  auto map(F f) const {
    using S = decltype(f(std::declval<const R&>()));
    RingMatrix<S> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("ring matrix product");
    RingMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend RingMatrix operator*(const R& s, const RingMatrix& a) {
    RingMatrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("ring matrix sum");
    RingMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }
  bool operator==(const RingMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using GroupRingMatrix = RingMatrix<GroupRingElement>;
using LaurentMatrix = RingMatrix<LaurentBivar>;

/// Free resolution in row convention. ranks[k] is the rank of degree k and
/// boundaries[k - 1] : degree k -> degree k - 1 is a ranks[k] x ranks[k - 1] matrix.
template <typename R>
struct RingComplex {
  std::vector<std::size_t> ranks;
  std::vector<RingMatrix<R>> boundaries;
  std::vector<std::vector<std::string>> basis;  // basis labels per degree

  int top_degree() const noexcept { return static_cast<int>(ranks.size()) - 1; }
  const RingMatrix<R>& d(int k) const { return boundaries.at(static_cast<std::size_t>(k - 1)); }
};

/// Twisted dual complex re-indexed by the top degree: degree k of the result
/// is the dual of degree top - k, with boundary the antipode-transpose.
template <typename R>
RingComplex<R> dual_complex(const RingComplex<R>& c) {
  RingComplex<R> out;
  const int top = c.top_degree();
  for (int k = 0; k <= top; ++k) {
    out.ranks.push_back(c.ranks[static_cast<std::size_t>(top - k)]);
    std::vector<std::string> labels;
    if (static_cast<std::size_t>(top - k) < c.basis.size())
      for (const auto& s : c.basis[static_cast<std::size_t>(top - k)]) labels.push_back(s + "*");
    out.basis.push_back(labels);
  }
  for (int k = 1; k <= top; ++k) out.boundaries.push_back(c.d(top - k + 1).antipode_transpose());
  return out;
}

}  // namespace knotarith::fox
