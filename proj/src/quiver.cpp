#include "qgr/quiver.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "qgr/echelon.hpp"
#include "qgr/errors.hpp"

namespace qgr {

using Eigen::Index;

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw InputError("duplicate vertex id \"" + v + "\"");
  seen.clear();
  const Index n = num_vertices();
  for (const auto& a : arrows_) {
    if (!seen.insert(a.id).second) throw InputError("duplicate arrow id \"" + a.id + "\"");
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw InputError("arrow \"" + a.id + "\" has an endpoint outside the vertex set");
  }

  // Kahn's algorithm; ties broken by vertex position so the order is stable.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& a : arrows_) ++indeg[static_cast<std::size_t>(a.target)];
  std::set<Index> ready;
  for (Index v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.insert(v);
  while (!ready.empty()) {
    const Index v = *ready.begin();
    ready.erase(ready.begin());
    topo_.push_back(v);
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[static_cast<std::size_t>(a.target)] == 0) ready.insert(a.target);
  }
  if (static_cast<Index>(topo_.size()) != n) throw InputError("quiver has a directed cycle");
}

Quiver Quiver::from_ids(std::vector<std::string> vertices,
                        const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  auto index_of = [&](const std::string& id) -> Index {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == id) return static_cast<Index>(i);
    throw InputError("arrow endpoint \"" + id + "\" is not a declared vertex");
  };
  std::vector<Arrow> out;
  for (const auto& [id, s, t] : arrows) out.push_back({id, index_of(s), index_of(t)});
  return Quiver(std::move(vertices), std::move(out));
}

Index Quiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return static_cast<Index>(i);
  throw InputError("unknown vertex \"" + id + "\"");
}

IntMatrix Quiver::adjacency() const {
  IntMatrix a = IntMatrix::Zero(num_vertices(), num_vertices());
  for (const auto& arrow : arrows_) ++a(arrow.source, arrow.target);
  return a;
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.num_vertices() || e.size() != q.num_vertices())
    throw InputError("euler_form: dimension vector does not match the quiver");
  long long s = d.dot(e);
  for (const auto& a : q.arrows()) s -= d(a.source) * e(a.target);
  return s;
}

long long euler_form(const EulerData& ed, const DimVector& d, const DimVector& e) {
  if (d.size() != ed.euler_matrix.rows() || e.size() != ed.euler_matrix.rows())
    throw InputError("euler_form: dimension vector does not match the quiver");
  return d.dot(ed.euler_matrix * e);
}

long long determinant(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  long long sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

bool positive_semidefinite(const IntMatrix& b) {
  const Index n = b.rows();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<Index> idx;
    for (Index i = 0; i < n; ++i)
      if (mask & (1UL << i)) idx.push_back(i);
    IntMatrix minor(static_cast<Index>(idx.size()), static_cast<Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        minor(static_cast<Index>(r), static_cast<Index>(c)) = b(idx[r], idx[c]);
    if (determinant(minor) < 0) return false;
  }
  return true;
}

std::optional<DimVector> positive_radical_generator(const IntMatrix& b) {
  const MatrixX<Rational> ker = kernel_basis(b.cast<Rational>());
  if (ker.rows() != 1) return std::nullopt;
  BigInt lcm = 1;
  for (Index i = 0; i < ker.cols(); ++i) {
    const BigInt den = boost::multiprecision::denominator(ker(0, i));
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (Index i = 0; i < ker.cols(); ++i) {
    const Rational scaled = ker(0, i) * Rational(lcm);
    ints.push_back(boost::multiprecision::numerator(scaled));
    g = boost::multiprecision::gcd(g, ints.back());
  }
  if (g == 0) return std::nullopt;
  DimVector out(ker.cols());
  const int sign = ints.front() < 0 ? -1 : 1;
  for (Index i = 0; i < ker.cols(); ++i) {
    out(i) = (ints[static_cast<std::size_t>(i)] / g).convert_to<long long>() * sign;
    if (out(i) <= 0) return std::nullopt;
  }
  return out;
}

}  // namespace

EulerData compute_euler_data(const Quiver& q) {
  const Index n = q.num_vertices();
  const IntMatrix a = q.adjacency();
  EulerData ed;
  ed.euler_matrix = IntMatrix::Identity(n, n) - a;

  // A is nilpotent, so E^{-1} = I + A + A^2 + ... + A^{n-1}.
  IntMatrix e_inv = IntMatrix::Identity(n, n);
  IntMatrix power = IntMatrix::Identity(n, n);
  for (Index k = 1; k < n; ++k) {
    power = power * a;
    e_inv += power;
  }
  ed.coxeter_matrix = -e_inv * ed.euler_matrix.transpose();
  ed.coxeter_inverse = -e_inv.transpose() * ed.euler_matrix;
  if (ed.coxeter_matrix * ed.coxeter_inverse != IntMatrix::Identity(n, n))
    throw PipelineError(PipelineError::Kind::Invariant, "Coxeter matrix inverse check failed");

  const IntMatrix b = ed.euler_matrix + ed.euler_matrix.transpose();
  if (n > 0 && positive_semidefinite(b)) {
    ed.null_root = positive_radical_generator(b);
    ed.is_affine = ed.null_root.has_value();
  }
  return ed;
}

long long defect(const EulerData& ed, const DimVector& d) {
  if (!ed.is_affine) throw InputError("defect: quiver is not affine");
  return euler_form(ed, *ed.null_root, d);
}

IntVector coxeter_apply(const EulerData& ed, const IntVector& d, long long power) {
  const IntMatrix& step = power >= 0 ? ed.coxeter_matrix : ed.coxeter_inverse;
  IntVector v = d;
  for (long long i = 0; i < (power >= 0 ? power : -power); ++i) v = step * v;
  return v;
}

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v(i));
  }
  return out + ")";
}

}  // namespace qgr
