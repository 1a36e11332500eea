#include "qgr/census.hpp"

#include <cstdio>
#include <functional>
#include <thread>

namespace qgr {

bool point_contains(const SubrepPoint& n, const SubrepPoint& s) {
  for (std::size_t i = 0; i < n.spaces.size(); ++i)
    if (!subspace_contains(n.spaces[i], s.spaces[i])) return false;
  return true;
}

SubrepPoint zero_point(const FpRep& m) {
  SubrepPoint p;
  for (Index i = 0; i < m.dims().size(); ++i) p.spaces.push_back(FpSubspace::zero(m.dims()(i)));
  return p;
}

SubrepPoint full_point(const FpRep& m) {
  SubrepPoint p;
  for (Index i = 0; i < m.dims().size(); ++i) p.spaces.push_back(FpSubspace::full(m.dims()(i), m.field()));
  return p;
}

std::size_t CensusBlock::transverse_points() const {
  std::size_t n = 0;
  for (const auto& entry : entries) n += entry.homologically_transverse;
  return n;
}

const CensusBlock* CensusReport::find(const DimVector& e) const {
  for (const auto& b : blocks)
    if (b.e == e) return &b;
  return nullptr;
}

std::size_t CensusReport::total_points() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.total_points();
  return n;
}

std::size_t CensusReport::transverse_points() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.transverse_points();
  return n;
}

std::vector<SubrepPoint> enumerate_subreps(const FpRep& m, const DimVector& e) {
  const Quiver& q = m.quiver();
  const Index nv = q.num_vertices();
  if (e.size() != nv) throw InputError("dimension vector has the wrong number of entries");
  for (Index i = 0; i < nv; ++i)
    if (e(i) < 0 || e(i) > m.dims()(i))
      throw InputError("dimension vector " + to_string(e) + " is not bounded by " + to_string(m.dims()));

  std::vector<std::vector<FpSubspace>> candidates(static_cast<std::size_t>(nv));
  for (Index v = 0; v < nv; ++v)
    candidates[static_cast<std::size_t>(v)] = enumerate_subspaces(m.dims()(v), e(v), m.field());

  std::vector<std::vector<std::size_t>> incoming(static_cast<std::size_t>(nv));
  for (std::size_t k = 0; k < q.arrows().size(); ++k)
    incoming[static_cast<std::size_t>(q.arrows()[k].target)].push_back(k);

  const auto& order = q.topological_order();
  std::vector<FpSubspace> chosen(static_cast<std::size_t>(nv));
  std::vector<SubrepPoint> out;

  // Sources of every arrow into order[depth] are already chosen, so the
  // images they force can be required of the candidate eagerly.
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size()) {
      out.push_back(SubrepPoint{chosen});
      return;
    }
    const Index v = order[depth];
    std::vector<VectorX<Zp>> forced;
    for (std::size_t k : incoming[static_cast<std::size_t>(v)]) {
      const auto& src = chosen[static_cast<std::size_t>(q.arrows()[k].source)];
      for (Index r = 0; r < src.dim(); ++r) forced.push_back(m.map(k) * src.basis().row(r).transpose());
    }
    if (!forced.empty()) {
      MatrixX<Zp> span(static_cast<Index>(forced.size()), m.dims()(v));
      for (std::size_t r = 0; r < forced.size(); ++r) span.row(static_cast<Index>(r)) = forced[r].transpose();
      if (rank(span) > e(v)) return;
    }
    for (const auto& cand : candidates[static_cast<std::size_t>(v)]) {
      bool ok = true;
      for (const auto& w : forced)
        if (!cand.contains_vector(w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen[static_cast<std::size_t>(v)] = cand;
      descend(depth + 1);
    }
  };
  descend(0);
  return out;
}

std::vector<DimVector> all_dimension_vectors(const DimVector& dims) {
  std::vector<DimVector> out;
  DimVector e = DimVector::Zero(dims.size());
  while (true) {
    out.push_back(e);
    Index i = dims.size();
    while (i > 0 && ++e(i - 1) > dims(i - 1)) e(--i) = 0;
    if (i == 0) break;
  }
  return out;
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) f(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

CensusReport census(const FpRep& m, const std::vector<DimVector>& es, const CensusOptions& opts) {
  if (!m.field().is_prime_field()) throw InputError("census needs a representation over a prime field");
  CensusReport report;
  report.quiver = m.quiver_ptr();
  report.rep_digest = representation_digest(m);
  report.q = m.field().modulus;
  report.dims = m.dims();

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (const auto& e : es) {
    CensusBlock block;
    block.e = e;
    block.expected_dim = euler_form(m.quiver(), e, m.dims() - e);
    for (auto& p : enumerate_subreps(m, e)) block.entries.push_back(CensusEntry{std::move(p), 0, 0, false, {}});
    for (std::size_t i = 0; i < block.entries.size(); ++i) jobs.emplace_back(report.blocks.size(), i);
    report.blocks.push_back(std::move(block));
  }

  parallel_for(jobs.size(), opts.threads, [&](std::size_t j) {
    CensusBlock& block = report.blocks[jobs[j].first];
    CensusEntry& entry = block.entries[jobs[j].second];
    const auto sq = sub_quotient(m, entry.point.spaces);
    const HomExtResult he = hom_ext(sq.sub, sq.quot);
    entry.hom_dim = he.hom_dim;
    entry.ext_dim = he.ext_dim;
    entry.homologically_transverse = he.ext_dim == 0;
    if (entry.hom_dim - entry.ext_dim != block.expected_dim)
      throw PipelineError(PipelineError::Kind::Invariant, "census entry violates hom - ext = <e, d - e>");
  });
  return report;
}

CensusReport census_all(const FpRep& m, const CensusOptions& opts) {
  return census(m, all_dimension_vectors(m.dims()), opts);
}

std::vector<SubrepPoint> transverse_homological(const CensusReport& report, const DimVector& e) {
  const CensusBlock* block = report.find(e);
  if (!block) throw InputError("dimension vector " + to_string(e) + " is not part of the census");
  std::vector<SubrepPoint> out;
  for (const auto& entry : block->entries)
    if (entry.ext_dim == 0) out.push_back(entry.point);
  return out;
}

std::string representation_digest(const FpRep& m) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](long long x) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(m.field().modulus);
  for (Index i = 0; i < m.dims().size(); ++i) mix(m.dims()(i));
  for (const auto& a : m.maps())
    for (Index r = 0; r < a.rows(); ++r)
      for (Index c = 0; c < a.cols(); ++c) mix(a(r, c).value());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(const SubrepPoint& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.spaces.size(); ++i) {
    if (i) out += ";";
    out += to_string(p.spaces[i]);
  }
  return out + "}";
}

}  // namespace qgr
