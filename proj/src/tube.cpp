#include "qgr/tube.hpp"

#include <algorithm>

namespace qgr {

using Kind = PipelineError::Kind;

SubrepPoint quasi_socle(const FpRep& m, const EulerData& ed, const CensusReport& census) {
  if (!ed.is_affine) throw PipelineError(Kind::NotAffine, "quiver is not affine; no tube structure");
  if (census.rep_digest != representation_digest(m)) throw InputError("census was computed for another representation");
  std::vector<const SubrepPoint*> candidates;
  for (const auto& block : census.blocks) {
    if (block.e.sum() == 0 || defect(ed, block.e) != 0) continue;
    for (const auto& entry : block.entries) candidates.push_back(&entry.point);
  }
  if (candidates.empty()) throw PipelineError(Kind::NotRegular, "not regular: no nonzero submodule of defect 0");

  std::vector<const SubrepPoint*> minimal;
  for (const SubrepPoint* c : candidates) {
    bool is_min = true;
    for (const SubrepPoint* o : candidates) {
      if (o != c && o->dims().sum() < c->dims().sum() && point_contains(*c, *o)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  if (minimal.size() != 1)
    throw PipelineError(Kind::AmbiguousQuasiSocle,
                        "ambiguous quasi-socle: " + std::to_string(minimal.size()) + " minimal defect-0 submodules");
  return *minimal.front();
}

TubeData tube_coordinates(const EulerData& ed, const DimVector& dim_m, const DimVector& dim_r0) {
  if (!ed.is_affine) throw PipelineError(Kind::NotAffine, "quiver is not affine; no tube structure");
  if (dim_r0.minCoeff() < 0 || dim_r0.sum() == 0)
    throw InputError("quasi-socle dimension vector must be nonnegative and nonzero");
  if (defect(ed, dim_r0) != 0) throw InputError("quasi-socle dimension vector must have defect 0");

  TubeData tube;
  tube.quasi_socle_dim = dim_r0;

  // tube ranks of affine quivers never exceed the number of vertices
  const long long bound = std::max<long long>(1, ed.coxeter_matrix.rows()) + 1;
  IntVector v = dim_r0;
  for (long long j = 1; j <= bound; ++j) {
    v = ed.coxeter_matrix * v;
    if (v == dim_r0) {
      tube.tube_rank = j;
      break;
    }
  }
  if (tube.tube_rank == 0)
    throw PipelineError(Kind::NotOnRay, "dimension vector " + to_string(dim_r0) + " has no Coxeter period");

  tube.ray_dims.push_back(DimVector::Zero(dim_r0.size()));
  IntVector term = dim_r0;
  const long long limit = dim_m.sum();
  for (long long t = 1; t <= limit; ++t) {
    if (term.minCoeff() < 0)
      throw PipelineError(Kind::NotOnRay, "not on the ray of R0: Phi^-j dim R0 leaves the positive cone");
    const DimVector partial = tube.ray_dims.back() + term;
    if (defect(ed, partial) != 0)
      throw PipelineError(Kind::Invariant, "ray dimension vector with nonzero defect");
    tube.ray_dims.push_back(partial);
    if (partial == dim_m) {
      tube.quasi_length = t;
      break;
    }
    if ((dim_m - partial).minCoeff() < 0) break;
    term = ed.coxeter_inverse * term;
  }
  if (tube.quasi_length == 0)
    throw PipelineError(Kind::NotOnRay, "not on the ray of R0: no partial sum equals " + to_string(dim_m));

  tube.l = tube.quasi_length / tube.tube_rank;
  tube.k = tube.quasi_length % tube.tube_rank;
  if (tube.l == 0)
    throw PipelineError(Kind::RigidRegular, "rigid regular: quasi-length below the tube rank");
  return tube;
}

SubrepPoint canonical_ray_submodule(const TubeData& tube, long long t, const CensusReport& census) {
  if (t < 0 || t > tube.quasi_length) throw InputError("ray index out of range");
  if (t == 0) {
    SubrepPoint p;
    for (Index i = 0; i < census.dims.size(); ++i) p.spaces.push_back(FpSubspace::zero(census.dims(i)));
    return p;
  }
  const DimVector& e = tube.ray_dims[static_cast<std::size_t>(t)];
  const CensusBlock* block = census.find(e);
  if (!block) throw InputError("census does not cover dimension vector " + to_string(e));
  if (block->total_points() != 1)
    throw PipelineError(Kind::RayAmbiguity, "ray ambiguity: Gr_" + to_string(e) + " has " +
                                                std::to_string(block->total_points()) + " points, expected 1");
  return block->entries.front().point;
}

namespace {

// Certificate that m is a regular indecomposable on the ray found: every
// submodule of a regular module has defect <= 0, and the defect-0 submodules
// of R_0^(t) are exactly the ray submodules.
void certify_ray(const EulerData& ed, const TubeData& tube, const CensusReport& census) {
  for (const auto& block : census.blocks) {
    if (block.entries.empty()) continue;
    const long long d = defect(ed, block.e);
    if (d > 0)
      throw PipelineError(Kind::NotRegular, "not regular: submodule of dimension " + to_string(block.e) +
                                                " has positive defect");
    if (d == 0 && std::find(tube.ray_dims.begin(), tube.ray_dims.end(), block.e) == tube.ray_dims.end())
      throw PipelineError(Kind::Decomposable, "not indecomposable: defect-0 submodule of dimension " +
                                                  to_string(block.e) + " is off the ray");
  }
}

}  // namespace

CombinatorialLocus transverse_combinatorial(const FpRep& m, const CensusReport& census) {
  CombinatorialLocus locus;
  for (const auto& block : census.blocks) {
    locus.member.emplace_back(block.entries.size(), true);
    locus.flags.emplace_back(block.entries.size());
  }
  locus.rigid = is_rigid(m);
  if (locus.rigid) return locus;

  try {
    const EulerData ed = compute_euler_data(m.quiver());
    const SubrepPoint socle = quasi_socle(m, ed, census);
    TubeData tube = tube_coordinates(ed, m.dims(), socle.dims());
    if (!(canonical_ray_submodule(tube, 1, census) == socle))
      throw PipelineError(Kind::Invariant, "quasi-socle differs from the first ray submodule");
    certify_ray(ed, tube, census);

    const long long low = tube.k + 1;
    const long long high = tube.l * tube.tube_rank - 1;
    locus.lower = canonical_ray_submodule(tube, low, census);
    locus.upper = canonical_ray_submodule(tube, high, census);
    locus.vacuous = high < low;
    locus.tube = std::move(tube);
  } catch (const PipelineError& err) {
    throw PipelineError(err.kind(), std::string("combinatorial Tr undefined for this input: ") + err.what());
  }

  for (std::size_t b = 0; b < census.blocks.size(); ++b) {
    const auto& entries = census.blocks[b].entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CombFlags f;
      f.contains_lower = point_contains(entries[i].point, *locus.lower);
      f.contained_in_upper = point_contains(*locus.upper, entries[i].point);
      locus.flags[b][i] = f;
      locus.member[b][i] = !(f.contains_lower && f.contained_in_upper);
    }
  }
  return locus;
}

CensusReport annotate(CensusReport census, const CombinatorialLocus& locus) {
  for (std::size_t b = 0; b < census.blocks.size(); ++b)
    for (std::size_t i = 0; i < census.blocks[b].entries.size(); ++i)
      census.blocks[b].entries[i].comb_flags = locus.flags[b][i];
  return census;
}

bool TransverseComparison::pipeline_failed() const {
  for (const auto& f : fields)
    if (f.error) return true;
  return false;
}

TransverseComparison theorem_check(const RationalRep& m, const std::vector<long long>& qs, const CensusOptions& opts) {
  if (qs.empty()) throw InputError("theorem check needs at least one prime");
  TransverseComparison out;
  out.verdict = true;
  for (long long q : qs) {
    FieldComparison fc;
    fc.q = q;
    const FpRep mq = reduce_mod_p(m, q);
    const CensusReport report = census_all(mq, opts);
    CombinatorialLocus locus;
    try {
      locus = transverse_combinatorial(mq, report);
    } catch (const PipelineError& err) {
      fc.error = err.what();
      out.verdict = false;
      out.fields.push_back(std::move(fc));
      continue;
    }
    fc.rigid = locus.rigid;
    fc.vacuous = locus.vacuous;
    fc.tube = locus.tube;
    fc.equal = true;
    for (std::size_t b = 0; b < report.blocks.size(); ++b) {
      const CensusBlock& block = report.blocks[b];
      ComparisonBlock cb;
      cb.e = block.e;
      cb.total_points = block.total_points();
      for (std::size_t i = 0; i < block.entries.size(); ++i) {
        const bool comb = locus.member[b][i];
        const bool hom = block.entries[i].homologically_transverse;
        if (comb) cb.combinatorial.push_back(i);
        if (hom) cb.homological.push_back(i);
        if (comb != hom) {
          cb.equal = false;
          out.counterexamples.push_back({q, block.e, block.entries[i].point, block.entries[i].ext_dim, locus.flags[b][i]});
        }
      }
      fc.equal = fc.equal && cb.equal;
      fc.blocks.push_back(std::move(cb));
    }
    out.verdict = out.verdict && fc.equal;
    out.fields.push_back(std::move(fc));
  }
  return out;
}

}  // namespace qgr
