#pragma once

#include <string>
#include <vector>

#include "qgr/echelon.hpp"
#include "qgr/errors.hpp"
#include "qgr/field.hpp"

namespace qgr {

/// A linear subspace of K^n stored by its reduced row echelon basis.
///
/// The RREF basis is the unique canonical representative of the row space,
/// so two SubspaceBasis values describe the same subspace iff they compare
/// equal.
template <class Scalar>
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  // Row space of `rows` (any spanning set, not necessarily independent).
  template <class Derived>
  static SubspaceBasis span(const Eigen::MatrixBase<Derived>& rows) {
    Echelon<Scalar> e = rref(rows);
    SubspaceBasis s;
    s.ambient_ = rows.cols();
    s.basis_ = e.reduced.topRows(e.rank);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static SubspaceBasis zero(Index ambient_dim) {
    SubspaceBasis s;
    s.ambient_ = ambient_dim;
    s.basis_.resize(0, ambient_dim);
    return s;
  }

  static SubspaceBasis full(Index ambient_dim, const FieldSpec& field) {
    SubspaceBasis s;
    s.ambient_ = ambient_dim;
    s.basis_ = MatrixX<Scalar>::Zero(ambient_dim, ambient_dim);
    for (Index i = 0; i < ambient_dim; ++i) {
      s.basis_(i, i) = field_element<Scalar>(field, 1);
      s.pivots_.push_back(i);
    }
    return s;
  }

  // Takes a matrix already in RREF with full row rank; pivots are recomputed.
  static SubspaceBasis from_rref(MatrixX<Scalar> basis) {
    SubspaceBasis s;
    s.ambient_ = basis.cols();
    for (Index r = 0; r < basis.rows(); ++r) {
      Index c = 0;
      while (c < basis.cols() && detail::is_zero(basis(r, c))) ++c;
      s.pivots_.push_back(c);
    }
    s.basis_ = std::move(basis);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatrixX<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // v minus its projection along the pivot coordinates; zero iff v is in the span.
  template <class Derived>
  VectorX<Scalar> residual(const Eigen::MatrixBase<Derived>& v) const {
    VectorX<Scalar> w = v;
    for (Index r = 0; r < dim(); ++r) {
      const Scalar c = w(pivots_[static_cast<std::size_t>(r)]);
      if (!detail::is_zero(c)) w -= c * basis_.row(r).transpose();
    }
    return w;
  }

  // Coordinates of a member vector in the RREF basis (read off at the pivots).
  template <class Derived>
  VectorX<Scalar> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    VectorX<Scalar> x(dim());
    for (Index r = 0; r < dim(); ++r) x(r) = v(pivots_[static_cast<std::size_t>(r)]);
    return x;
  }

  template <class Derived>
  bool contains_vector(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_) throw InputError("membership test: vector length does not match ambient dimension");
    const VectorX<Scalar> w = residual(v);
    for (Index i = 0; i < w.size(); ++i)
      if (!detail::is_zero(w(i))) return false;
    return true;
  }

  // Non-pivot columns in increasing order; these complete the basis to all of K^n.
  std::vector<Index> free_columns() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index c = 0; c < ambient_; ++c) {
      if (k < pivots_.size() && pivots_[k] == c)
        ++k;
      else
        out.push_back(c);
    }
    return out;
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  MatrixX<Scalar> basis_;
  std::vector<Index> pivots_;
};

template <class Scalar, class Derived>
bool solve_membership(const SubspaceBasis<Scalar>& space, const Eigen::MatrixBase<Derived>& v) {
  return space.contains_vector(v);
}

// True iff b is a subspace of a.
template <class Scalar>
bool subspace_contains(const SubspaceBasis<Scalar>& a, const SubspaceBasis<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_contains: ambient dimensions differ");
  if (b.dim() > a.dim()) return false;
  for (Index r = 0; r < b.dim(); ++r)
    if (!a.contains_vector(b.basis().row(r).transpose())) return false;
  return true;
}

template <class Scalar>
std::string to_string(const SubspaceBasis<Scalar>& s) {
  std::string out = "[";
  for (Index r = 0; r < s.dim(); ++r) {
    out += r ? ",[" : "[";
    for (Index c = 0; c < s.ambient_dim(); ++c) {
      if (c) out += ",";
      if constexpr (is_prime_scalar_v<Scalar>)
        out += std::to_string(s.basis()(r, c).value());
      else
        out += s.basis()(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

using FpSubspace = SubspaceBasis<Zp>;

// Number of e-dimensional subspaces of F_q^d.
BigInt gaussian_binomial(long long d, long long e, long long q);

// Every e-dimensional subspace of F_q^d exactly once. Order: pivot column sets
// lexicographically, then the free entries of each Schubert cell as an
// odometer (last free entry fastest).
std::vector<FpSubspace> enumerate_subspaces(Index ambient_dim, Index dim, const FieldSpec& field);

}  // namespace qgr
