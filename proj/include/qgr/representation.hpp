#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qgr/echelon.hpp"
#include "qgr/errors.hpp"
#include "qgr/field.hpp"
#include "qgr/quiver.hpp"
#include "qgr/subspace.hpp"

namespace qgr {

/// A representation of a quiver over an exact field: one vector space K^{d_i}
/// per vertex and, for each arrow a: i -> j, a d_j x d_i matrix acting on
/// column vectors.
template <class Scalar>
class Representation {
 public:
  using Matrix = MatrixX<Scalar>;

  Representation() = default;

  Representation(std::shared_ptr<const Quiver> quiver, FieldSpec field, DimVector dims, std::vector<Matrix> maps)
      : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    check_scalar_matches<Scalar>(field_);
    if (!quiver_) throw InputError("representation without a quiver");
    if (dims_.size() != quiver_->num_vertices()) throw InputError("dimension vector does not match the quiver");
    for (Index i = 0; i < dims_.size(); ++i)
      if (dims_(i) < 0) throw InputError("negative dimension at vertex \"" + quiver_->vertices()[static_cast<std::size_t>(i)] + "\"");
    if (static_cast<Index>(maps_.size()) != quiver_->num_arrows()) throw InputError("one matrix per arrow is required");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
      const Arrow& a = quiver_->arrows()[k];
      if (maps_[k].rows() != dims_(a.target) || maps_[k].cols() != dims_(a.source))
        throw InputError("matrix for arrow \"" + a.id + "\" has shape " + std::to_string(maps_[k].rows()) + "x" +
                         std::to_string(maps_[k].cols()) + ", expected " + std::to_string(dims_(a.target)) + "x" +
                         std::to_string(dims_(a.source)));
      if constexpr (is_prime_scalar_v<Scalar>) {
        for (Index r = 0; r < maps_[k].rows(); ++r)
          for (Index c = 0; c < maps_[k].cols(); ++c) {
            Scalar& x = maps_[k](r, c);
            if (!x.bound())
              x = Zp(x.value(), field_.modulus);
            else if (x.modulus() != field_.modulus)
              throw InputError("entry of arrow \"" + a.id + "\" lies in the wrong field");
          }
      }
    }
  }

  static Representation zero(std::shared_ptr<const Quiver> quiver, FieldSpec field) {
    const Index n = quiver->num_vertices();
    std::vector<Matrix> maps(static_cast<std::size_t>(quiver->num_arrows()));
    return Representation(std::move(quiver), field, DimVector::Zero(n), std::move(maps));
  }

  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  const FieldSpec& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  Index total_dim() const { return dims_.sum(); }

  friend bool operator==(const Representation& a, const Representation& b) {
    if (!(a.field_ == b.field_) || !(*a.quiver_ == *b.quiver_) || a.dims_ != b.dims_) return false;
    for (std::size_t k = 0; k < a.maps_.size(); ++k)
      if (!(a.maps_[k] == b.maps_[k])) return false;
    return true;
  }

 private:
  std::shared_ptr<const Quiver> quiver_;
  FieldSpec field_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

using RationalRep = Representation<Rational>;
using FpRep = Representation<Zp>;

template <class Scalar>
void check_compatible(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  if (!(m.field() == n.field())) throw InputError("representations over different fields");
  if (m.quiver_ptr() != n.quiver_ptr() && !(m.quiver() == n.quiver()))
    throw InputError("representations of different quivers");
}

struct HomExtResult {
  long long hom_dim = 0;
  long long ext_dim = 0;

  friend bool operator==(const HomExtResult&, const HomExtResult&) = default;
};

/// The map  (f_i)_i  |->  (f_j M_a - N_a f_i)_{a: i -> j}  from the vertex-wise
/// Hom spaces to the arrow-wise ones. Its kernel is Hom(m, n) and, the path
/// algebra being hereditary, its cokernel is Ext^1(m, n).
template <class Scalar>
MatrixX<Scalar> hom_complex(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  check_compatible(m, n);
  const Quiver& q = m.quiver();
  const Index nv = q.num_vertices();
  std::vector<Index> var_offset(static_cast<std::size_t>(nv) + 1, 0);
  for (Index i = 0; i < nv; ++i)
    var_offset[static_cast<std::size_t>(i) + 1] = var_offset[static_cast<std::size_t>(i)] + n.dims()(i) * m.dims()(i);
  Index eqs = 0;
  for (const Arrow& a : q.arrows()) eqs += n.dims()(a.target) * m.dims()(a.source);

  MatrixX<Scalar> delta = MatrixX<Scalar>::Zero(eqs, var_offset.back());
  // f_i is n_i x m_i, entry (r, c) stored at var_offset[i] + r * m_i + c
  auto var = [&](Index vertex, Index r, Index c) {
    return var_offset[static_cast<std::size_t>(vertex)] + r * m.dims()(vertex) + c;
  };
  Index row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrows()[k];
    const Index i = a.source, j = a.target;
    const auto& ma = m.map(k);
    const auto& na = n.map(k);
    for (Index r = 0; r < n.dims()(j); ++r) {
      for (Index c = 0; c < m.dims()(i); ++c, ++row) {
        for (Index t = 0; t < m.dims()(j); ++t)
          if (!detail::is_zero(ma(t, c))) delta(row, var(j, r, t)) += ma(t, c);
        for (Index t = 0; t < n.dims()(i); ++t)
          if (!detail::is_zero(na(r, t))) delta(row, var(i, t, c)) -= na(r, t);
      }
    }
  }
  return delta;
}

template <class Scalar>
HomExtResult hom_ext(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  const MatrixX<Scalar> delta = hom_complex(m, n);
  const long long r = rank(delta);
  HomExtResult out{delta.cols() - r, delta.rows() - r};
  if (out.hom_dim - out.ext_dim != euler_form(m.quiver(), m.dims(), n.dims()))
    throw PipelineError(PipelineError::Kind::Invariant, "hom - ext differs from the Euler form");
  return out;
}

template <class Scalar>
bool is_rigid(const Representation<Scalar>& m) {
  return hom_ext(m, m).ext_dim == 0;
}

template <class Scalar>
void check_spaces(const Representation<Scalar>& m, const std::vector<SubspaceBasis<Scalar>>& spaces) {
  if (static_cast<Index>(spaces.size()) != m.quiver().num_vertices())
    throw InputError("one subspace per vertex is required");
  for (std::size_t i = 0; i < spaces.size(); ++i)
    if (spaces[i].ambient_dim() != m.dims()(static_cast<Index>(i)))
      throw InputError("subspace at vertex \"" + m.quiver().vertices()[i] + "\" has the wrong ambient dimension");
}

// True iff M_a(V_i) is contained in V_j for every arrow a: i -> j.
template <class Scalar>
bool is_subrep(const Representation<Scalar>& m, const std::vector<SubspaceBasis<Scalar>>& spaces) {
  check_spaces(m, spaces);
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const Arrow& a = m.quiver().arrows()[k];
    const auto& src = spaces[static_cast<std::size_t>(a.source)];
    const auto& dst = spaces[static_cast<std::size_t>(a.target)];
    for (Index r = 0; r < src.dim(); ++r)
      if (!dst.contains_vector(m.map(k) * src.basis().row(r).transpose())) return false;
  }
  return true;
}

template <class Scalar>
struct SubQuotient {
  Representation<Scalar> sub;
  Representation<Scalar> quot;
};

/// Subrepresentation on `spaces` (in their RREF bases) and the quotient, with
/// each ambient basis completed by the unit vectors at non-pivot positions.
template <class Scalar>
SubQuotient<Scalar> sub_quotient(const Representation<Scalar>& m, const std::vector<SubspaceBasis<Scalar>>& spaces) {
  if (!is_subrep(m, spaces)) throw InputError("sub_quotient: spaces do not form a subrepresentation");
  const Quiver& q = m.quiver();
  const Index nv = q.num_vertices();
  DimVector sub_dims(nv), quot_dims(nv);
  std::vector<std::vector<Index>> free(static_cast<std::size_t>(nv));
  for (Index i = 0; i < nv; ++i) {
    sub_dims(i) = spaces[static_cast<std::size_t>(i)].dim();
    quot_dims(i) = m.dims()(i) - sub_dims(i);
    free[static_cast<std::size_t>(i)] = spaces[static_cast<std::size_t>(i)].free_columns();
  }
  std::vector<MatrixX<Scalar>> sub_maps, quot_maps;
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const Arrow& a = q.arrows()[k];
    const auto& src = spaces[static_cast<std::size_t>(a.source)];
    const auto& dst = spaces[static_cast<std::size_t>(a.target)];
    const auto& fs = free[static_cast<std::size_t>(a.source)];
    const auto& ft = free[static_cast<std::size_t>(a.target)];

    MatrixX<Scalar> s(dst.dim(), src.dim());
    for (Index c = 0; c < src.dim(); ++c) s.col(c) = dst.coordinates(m.map(k) * src.basis().row(c).transpose());
    MatrixX<Scalar> t(static_cast<Index>(ft.size()), static_cast<Index>(fs.size()));
    for (std::size_t c = 0; c < fs.size(); ++c) {
      const VectorX<Scalar> w = dst.residual(m.map(k).col(fs[c]));
      for (std::size_t r = 0; r < ft.size(); ++r) t(static_cast<Index>(r), static_cast<Index>(c)) = w(ft[r]);
    }
    sub_maps.push_back(std::move(s));
    quot_maps.push_back(std::move(t));
  }
  return {Representation<Scalar>(m.quiver_ptr(), m.field(), sub_dims, std::move(sub_maps)),
          Representation<Scalar>(m.quiver_ptr(), m.field(), quot_dims, std::move(quot_maps))};
}

// Entrywise reduction of a rational representation modulo p.
FpRep reduce_mod_p(const RationalRep& m, long long p);

template <class Scalar>
Representation<Scalar> direct_sum(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  check_compatible(m, n);
  std::vector<MatrixX<Scalar>> maps;
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& a = m.map(k);
    const auto& b = n.map(k);
    MatrixX<Scalar> s = MatrixX<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    s.topLeftCorner(a.rows(), a.cols()) = a;
    s.bottomRightCorner(b.rows(), b.cols()) = b;
    maps.push_back(std::move(s));
  }
  return Representation<Scalar>(m.quiver_ptr(), m.field(), m.dims() + n.dims(), std::move(maps));
}

}  // namespace qgr
