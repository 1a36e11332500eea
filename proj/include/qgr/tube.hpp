#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgr/census.hpp"

namespace qgr {

/// Position of a regular indecomposable M = R_0^{(lp+k)} in its tube.
struct TubeData {
  DimVector quasi_socle_dim;       // dim R_0
  long long tube_rank = 0;         // p
  long long quasi_length = 0;      // lp + k
  long long l = 0;
  long long k = 0;
  std::vector<DimVector> ray_dims;  // ray_dims[t] = dim R_0^{(t)}, t = 0..quasi_length
};

// The unique containment-minimal nonzero submodule of defect zero.
SubrepPoint quasi_socle(const FpRep& m, const EulerData& ed, const CensusReport& census);

// Period of dim R_0 under the Coxeter transformation and the quasi-length t
// with sum_{j<t} Phi^{-j} dim R_0 = dim M.
TubeData tube_coordinates(const EulerData& ed, const DimVector& dim_m, const DimVector& dim_r0);

// The unique point of Gr_{ray_dims[t]}(M); t = 0 gives the zero submodule.
SubrepPoint canonical_ray_submodule(const TubeData& tube, long long t, const CensusReport& census);

struct CombinatorialLocus {
  bool rigid = false;
  std::optional<TubeData> tube;
  std::optional<SubrepPoint> lower;  // R_0^{(k+1)}
  std::optional<SubrepPoint> upper;  // R_0^{(lp-1)}
  bool vacuous = false;              // lp - 1 < k + 1, so nothing is excluded
  // Indexed like census.blocks[b].entries[i].
  std::vector<std::vector<bool>> member;
  std::vector<std::vector<CombFlags>> flags;
};

// Gr(M) minus the points N with R_0^{(k+1)} <= N <= R_0^{(lp-1)}; all of
// Gr(M) when M is rigid. `census` must cover every dimension vector.
CombinatorialLocus transverse_combinatorial(const FpRep& m, const CensusReport& census);

// Copy of `census` with comb_flags filled in from `locus`.
CensusReport annotate(CensusReport census, const CombinatorialLocus& locus);

struct ComparisonBlock {
  DimVector e;
  std::size_t total_points = 0;
  std::vector<std::size_t> combinatorial;  // entry indices
  std::vector<std::size_t> homological;
  bool equal = true;
};

struct Counterexample {
  long long q = 0;
  DimVector e;
  SubrepPoint point;
  long long ext_dim = 0;
  CombFlags flags;
};

struct FieldComparison {
  long long q = 0;
  std::optional<std::string> error;  // tube pipeline failure for this q
  bool rigid = false;
  bool vacuous = false;
  std::optional<TubeData> tube;
  std::vector<ComparisonBlock> blocks;
  bool equal = false;
};

struct TransverseComparison {
  std::vector<FieldComparison> fields;
  std::vector<Counterexample> counterexamples;
  bool verdict = false;

  bool pipeline_failed() const;
};

// For each q, compares the combinatorial and homological transverse loci of
// the reduction of m over every dimension vector.
TransverseComparison theorem_check(const RationalRep& m, const std::vector<long long>& qs,
                                   const CensusOptions& opts = {});

}  // namespace qgr
