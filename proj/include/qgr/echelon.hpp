#pragma once

// Exact Gauss-Jordan elimination over Rational and Zp coefficient matrices.
// Eigen's own decompositions pivot on magnitude and are not usable here.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qgr/scalar.hpp"

namespace qgr {

using Index = Eigen::Index;

template <class Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;     // reduced row echelon form, same shape as the input
  Index rank = 0;              // number of nonzero rows of `reduced`
  std::vector<Index> pivots;   // pivot column of each nonzero row
};

namespace detail {

template <class Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

}  // namespace detail

template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = m;
  MatrixX<Scalar>& a = out.reduced;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && detail::is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || detail::is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

// Rank by forward elimination only; cheaper than rref when the form is unused.
template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = m;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && detail::is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      if (detail::is_zero(a(i, c))) continue;
      const Scalar f = a(i, c) * inv;
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Rows form a basis of {v : m v = 0}; one row per free column of rref(m).
template <class Derived>
MatrixX<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Echelon<Scalar> e = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols - e.rank, cols);
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(row, f) = Scalar(1);
    for (Index r = 0; r < e.rank; ++r) basis(row, e.pivots[static_cast<std::size_t>(r)]) = -e.reduced(r, f);
    ++row;
  }
  return basis;
}

// Inverse of a square matrix; `second` is false (and `first` empty) when m is singular.
template <class Derived>
std::pair<MatrixX<typename Derived::Scalar>, bool> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  const Echelon<Scalar> e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)) return {MatrixX<Scalar>(), false};
  return {e.reduced.rightCols(n), true};
}

}  // namespace qgr
