#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgr/representation.hpp"

namespace qgr {

/// A point N of Gr_e(M): one canonical (RREF) subspace per vertex.
struct SubrepPoint {
  std::vector<FpSubspace> spaces;

  DimVector dims() const {
    DimVector d(static_cast<Index>(spaces.size()));
    for (std::size_t i = 0; i < spaces.size(); ++i) d(static_cast<Index>(i)) = spaces[i].dim();
    return d;
  }

  friend bool operator==(const SubrepPoint&, const SubrepPoint&) = default;
};

// N contains S at every vertex.
bool point_contains(const SubrepPoint& n, const SubrepPoint& s);
SubrepPoint zero_point(const FpRep& m);
SubrepPoint full_point(const FpRep& m);

// Containment of N relative to the two canonical ray submodules.
struct CombFlags {
  bool contains_lower = false;
  bool contained_in_upper = false;
};

struct CensusEntry {
  SubrepPoint point;
  long long hom_dim = 0;  // dim Hom(N, M/N), the tangent space dimension
  long long ext_dim = 0;  // dim Ext^1(N, M/N)
  bool homologically_transverse = false;
  std::optional<CombFlags> comb_flags;
};

struct CensusBlock {
  DimVector e;
  long long expected_dim = 0;  // <e, d - e>
  std::vector<CensusEntry> entries;

  std::size_t total_points() const { return entries.size(); }
  std::size_t transverse_points() const;
};

struct CensusReport {
  std::shared_ptr<const Quiver> quiver;
  std::string rep_digest;
  std::uint32_t q = 0;
  DimVector dims;
  std::vector<CensusBlock> blocks;  // in the order dimension vectors were requested

  const CensusBlock* find(const DimVector& e) const;
  std::size_t total_points() const;
  std::size_t transverse_points() const;
};

struct CensusOptions {
  unsigned threads = 1;
};

// Every e-dimensional subrepresentation of m exactly once, in the product
// order of enumerate_subspaces over the vertices in topological order.
std::vector<SubrepPoint> enumerate_subreps(const FpRep& m, const DimVector& e);

// All e with 0 <= e <= dims, first vertex varying slowest.
std::vector<DimVector> all_dimension_vectors(const DimVector& dims);

CensusReport census(const FpRep& m, const std::vector<DimVector>& es, const CensusOptions& opts = {});
CensusReport census_all(const FpRep& m, const CensusOptions& opts = {});

// Points N of Gr_e with Ext^1(N, M/N) = 0.
std::vector<SubrepPoint> transverse_homological(const CensusReport& report, const DimVector& e);

inline long long tangent_dim(const CensusEntry& entry) { return entry.hom_dim; }

// Stable FNV-1a digest of a representation's field, dims and matrices.
std::string representation_digest(const FpRep& m);

std::string to_string(const SubrepPoint& p);

}  // namespace qgr
