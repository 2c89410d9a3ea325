#pragma once

#include "knotarith/bigint.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace knotarith::homalg {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> D;
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
void swap_rows(Matrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

// row_dst += q * row_src
template <typename Scalar>
void add_row(Matrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (m(src, j) != Scalar(0)) m(dst, j) += q * m(src, j);
}

template <typename Scalar>
void add_col(Matrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m(i, src) != Scalar(0)) m(i, dst) += q * m(i, src);
}

}  // namespace detail

/// Smith normal form with smallest-absolute-value pivoting.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  using detail::abs_value;
  const Eigen::Index m = A.rows(), n = A.cols();
  SmithForm<Scalar> s;
  s.D = A;
  s.U = Matrix<Scalar>::Identity(m, m);
  s.V = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar>& D = s.D;
  const Scalar zero(0);

  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block.
    Eigen::Index pi = -1, pj = -1;
    Scalar best(0);
    for (Eigen::Index j = t; j < n; ++j)
      for (Eigen::Index i = t; i < m; ++i)
        if (D(i, j) != zero && (pi < 0 || abs_value(D(i, j)) < best)) {
          best = abs_value(D(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    detail::swap_rows(D, t, pi);
    detail::swap_rows(s.U, t, pi);
    detail::swap_cols(D, t, pj);
    detail::swap_cols(s.V, t, pj);

    for (;;) {
      bool clear = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == zero) continue;
        const Scalar q = D(i, t) / D(t, t);
        if (q != zero) {
          detail::add_row(D, i, t, Scalar(-q));
          detail::add_row(s.U, i, t, Scalar(-q));
        }
        if (D(i, t) != zero) clear = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == zero) continue;
        const Scalar q = D(t, j) / D(t, t);
        if (q != zero) {
          detail::add_col(D, j, t, Scalar(-q));
          detail::add_col(s.V, j, t, Scalar(-q));
        }
        if (D(t, j) != zero) clear = false;
      }
      if (!clear) {
        // A remainder smaller than the pivot survives in row or column t.
        Eigen::Index bi = t, bj = t;
        Scalar b = abs_value(D(t, t));
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (D(i, t) != zero && abs_value(D(i, t)) < b) {
            b = abs_value(D(i, t));
            bi = i;
            bj = t;
          }
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(t, j) != zero && abs_value(D(t, j)) < b) {
            b = abs_value(D(t, j));
            bi = t;
            bj = j;
          }
        detail::swap_rows(D, t, bi);
        detail::swap_rows(s.U, t, bi);
        detail::swap_cols(D, t, bj);
        detail::swap_cols(s.V, t, bj);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != zero) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      detail::add_row(D, t, bad, Scalar(1));
      detail::add_row(s.U, t, bad, Scalar(1));
    }
    if (D(t, t) < zero) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }
  s.rank = t;
  return s;
}

/// Rank over Q.
template <typename Scalar>
Eigen::Index integer_rank(const Matrix<Scalar>& A) {
  return smith_normal_form(A).rank;
}

/// Basis of the integer kernel {x : A x = 0}, as columns.
template <typename Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& A) {
  const auto s = smith_normal_form(A);
  return s.V.rightCols(A.cols() - s.rank);
}

/// An integer solution of A x = b, if one exists.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_integer(const Matrix<Scalar>& A, const Vector<Scalar>& b) {
  const auto s = smith_normal_form(A);
  const Vector<Scalar> c = s.U * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(A.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c(i) % s.D(i, i) != Scalar(0)) return std::nullopt;
      y(i) = c(i) / s.D(i, i);
    } else if (c(i) != Scalar(0)) {
      return std::nullopt;
    }
  }
  return Vector<Scalar>(s.V * y);
}

}  // namespace knotarith::homalg
