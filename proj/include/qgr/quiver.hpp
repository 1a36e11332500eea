#pragma once

#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "qgr/scalar.hpp"

namespace qgr {

// Dimension vectors are integer column vectors indexed by vertex position.
using DimVector = IntVector;

struct Arrow {
  std::string id;
  Eigen::Index source = 0;  // vertex position
  Eigen::Index target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite acyclic quiver. Construction validates ids and acyclicity and
/// throws InputError otherwise.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  // Convenience: arrows given as (id, source id, target id).
  static Quiver from_ids(std::vector<std::string> vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  Eigen::Index num_vertices() const { return static_cast<Eigen::Index>(vertices_.size()); }
  Eigen::Index num_arrows() const { return static_cast<Eigen::Index>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Eigen::Index>& topological_order() const { return topo_; }

  // Position of a vertex id; throws InputError if unknown.
  Eigen::Index vertex_index(const std::string& id) const;

  // A[i][j] = number of arrows i -> j.
  IntMatrix adjacency() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Eigen::Index> topo_;
};

// <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

struct EulerData {
  IntMatrix euler_matrix;     // E = I - A
  IntMatrix coxeter_matrix;   // Phi = -E^{-1} E^T
  IntMatrix coxeter_inverse;  // Phi^{-1}
  std::optional<DimVector> null_root;
  bool is_affine = false;
};

EulerData compute_euler_data(const Quiver& q);

// d^T E e, the matrix form of euler_form.
long long euler_form(const EulerData& ed, const DimVector& d, const DimVector& e);

// Defect <delta, d>; negative on preprojectives, zero on regulars.
long long defect(const EulerData& ed, const DimVector& d);

// Phi^power d; negative powers use Phi^{-1}.
IntVector coxeter_apply(const EulerData& ed, const IntVector& d, long long power);

// Determinant of a small integer matrix (fraction-free Bareiss elimination).
long long determinant(const IntMatrix& m);

std::string to_string(const IntVector& v);

}  // namespace qgr
