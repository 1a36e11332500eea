#pragma once

// Test-only reference implementations. They take deliberately different
// routes from the library code they check: subspaces as explicit vector sets,
// Hom spaces by exhaustive search over all tuples of matrices.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qgr/census.hpp"
#include "qgr/document.hpp"

namespace qgr::oracle {

// Vectors of F_q^d encoded as integers in base q, coordinate 0 most significant.
inline std::vector<int> decode(long long code, int d, int q) {
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(code % q);
    code /= q;
  }
  return v;
}

inline long long encode(const std::vector<int>& v, int q) {
  long long c = 0;
  for (int x : v) c = c * q + ((x % q) + q) % q;
  return c;
}

inline long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

using VectorSet = std::set<long long>;

// Every subspace of F_q^d of dimension e, as the set of all its vectors.
// Built level by level: each (k+1)-space is a k-space plus one outside vector.
inline std::vector<VectorSet> subspaces_as_sets(int d, int e, int q) {
  const long long nvec = ipow(q, d);
  std::set<VectorSet> level = {VectorSet{0}};
  for (int k = 0; k < e; ++k) {
    std::set<VectorSet> next;
    for (const auto& s : level) {
      for (long long v = 0; v < nvec; ++v) {
        if (s.count(v)) continue;
        const auto vv = decode(v, d, q);
        VectorSet grown;
        for (long long w : s) {
          const auto ww = decode(w, d, q);
          for (int c = 0; c < q; ++c) {
            std::vector<int> x(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = ww[static_cast<std::size_t>(i)] + c * vv[static_cast<std::size_t>(i)];
            grown.insert(encode(x, q));
          }
        }
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

inline std::vector<std::vector<int>> integer_matrix(const MatrixX<Zp>& m) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m.rows()), std::vector<int>(static_cast<std::size_t>(m.cols())));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(m(r, c).value());
  return out;
}

// |Gr_e(M)(F_q)| with subspaces as vector sets and arrows applied vector by vector.
inline long long vector_set_grassmannian_count(const FpRep& m, const DimVector& e) {
  const int q = static_cast<int>(m.field().modulus);
  const Quiver& quiver = m.quiver();
  const auto nv = static_cast<std::size_t>(quiver.num_vertices());
  std::vector<std::vector<VectorSet>> cands(nv);
  for (std::size_t v = 0; v < nv; ++v)
    cands[v] = subspaces_as_sets(static_cast<int>(m.dims()(static_cast<Index>(v))), static_cast<int>(e(static_cast<Index>(v))), q);
  std::vector<std::vector<std::vector<int>>> mats;
  for (const auto& a : m.maps()) mats.push_back(integer_matrix(a));

  long long count = 0;
  std::vector<std::size_t> pick(nv, 0);
  for (std::size_t v = 0; v < nv; ++v)
    if (cands[v].empty()) return 0;
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < quiver.arrows().size() && ok; ++k) {
      const auto& a = quiver.arrows()[k];
      const int ds = static_cast<int>(m.dims()(a.source)), dt = static_cast<int>(m.dims()(a.target));
      for (long long code : cands[static_cast<std::size_t>(a.source)][pick[static_cast<std::size_t>(a.source)]]) {
        const auto x = decode(code, ds, q);
        std::vector<int> y(static_cast<std::size_t>(dt), 0);
        for (int r = 0; r < dt; ++r)
          for (int c = 0; c < ds; ++c) y[static_cast<std::size_t>(r)] += mats[k][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
        if (!cands[static_cast<std::size_t>(a.target)][pick[static_cast<std::size_t>(a.target)]].count(encode(y, q))) {
          ok = false;
          break;
        }
      }
    }
    count += ok;
    std::size_t i = nv;
    while (i > 0 && ++pick[i - 1] == cands[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

// dim Hom(m, n) over F_q by testing every tuple (f_i) of matrices.
inline long long brute_force_hom_dim(const FpRep& m, const FpRep& n) {
  const int q = static_cast<int>(m.field().modulus);
  const Quiver& quiver = m.quiver();
  const auto nv = static_cast<std::size_t>(quiver.num_vertices());
  std::vector<long long> offset(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i)
    offset[i + 1] = offset[i] + n.dims()(static_cast<Index>(i)) * m.dims()(static_cast<Index>(i));
  const long long nvars = offset.back();
  if (ipow(q, nvars) > 2'000'000) throw std::length_error("brute_force_hom_dim: search space too large");
  std::vector<std::vector<std::vector<int>>> ma, na;
  for (const auto& x : m.maps()) ma.push_back(integer_matrix(x));
  for (const auto& x : n.maps()) na.push_back(integer_matrix(x));

  long long solutions = 0;
  for (long long code = 0; code < ipow(q, nvars); ++code) {
    const auto f = decode(code, static_cast<int>(nvars), q);
    auto entry = [&](std::size_t v, long long r, long long c) {
      return f[static_cast<std::size_t>(offset[v] + r * m.dims()(static_cast<Index>(v)) + c)];
    };
    bool ok = true;
    for (std::size_t k = 0; k < quiver.arrows().size() && ok; ++k) {
      const auto& a = quiver.arrows()[k];
      const auto i = static_cast<std::size_t>(a.source), j = static_cast<std::size_t>(a.target);
      for (long long r = 0; r < n.dims()(a.target) && ok; ++r)
        for (long long c = 0; c < m.dims()(a.source) && ok; ++c) {
          long long lhs = 0, rhs = 0;
          for (long long t = 0; t < m.dims()(a.target); ++t) lhs += entry(j, r, t) * ma[k][static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
          for (long long t = 0; t < n.dims()(a.source); ++t) rhs += na[k][static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] * entry(i, t, c);
          ok = ((lhs - rhs) % q) == 0;
        }
    }
    solutions += ok;
  }
  long long dim = 0;
  while (solutions > 1) {
    solutions /= q;
    ++dim;
  }
  return dim;
}

// Canonical bases of all e-dimensional subspaces, found by canonicalizing
// every spanning e-tuple of vectors (no Schubert-cell enumeration).
inline std::vector<FpSubspace> subspaces_by_spanning_sets(Index d, Index e, const FieldSpec& field) {
  static std::map<std::tuple<Index, Index, std::uint32_t>, std::vector<FpSubspace>> cache;
  const auto key = std::make_tuple(d, e, field.modulus);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const int q = static_cast<int>(field.modulus);
  const long long total = ipow(q, d * e);
  std::vector<FpSubspace> out;
  for (long long code = 0; code < total; ++code) {
    const auto digits = decode(code, static_cast<int>(d * e), q);
    MatrixX<Zp> rows(e, d);
    for (Index r = 0; r < e; ++r)
      for (Index c = 0; c < d; ++c) rows(r, c) = Zp(digits[static_cast<std::size_t>(r * d + c)], field.modulus);
    auto s = FpSubspace::span(rows);
    if (s.dim() != e) continue;
    bool dup = false;
    for (const auto& o : out) dup = dup || o == s;
    if (!dup) out.push_back(std::move(s));
  }
  cache[key] = out;
  return out;
}

// Independent enumeration of Gr_e(M): per-vertex spanning-set canonicalization,
// full product, filter by is_subrep. Refuses inputs beyond desk scale.
inline std::vector<SubrepPoint> brute_force_subreps(const FpRep& m, const DimVector& e) {
  if (m.total_dim() > 8 || m.field().modulus > 3)
    throw InputError("brute_force_subreps: needs total dimension <= 8 and q <= 3");
  const auto nv = static_cast<std::size_t>(m.quiver().num_vertices());
  std::vector<std::vector<FpSubspace>> cands(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    cands[v] = subspaces_by_spanning_sets(m.dims()(static_cast<Index>(v)), e(static_cast<Index>(v)), m.field());
    if (cands[v].empty()) return {};
  }
  std::vector<SubrepPoint> out;
  std::vector<std::size_t> pick(nv, 0);
  while (true) {
    SubrepPoint p;
    for (std::size_t v = 0; v < nv; ++v) p.spaces.push_back(cands[v][pick[v]]);
    if (is_subrep(m, p.spaces)) out.push_back(std::move(p));
    std::size_t i = nv;
    while (i > 0 && ++pick[i - 1] == cands[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline bool same_point_set(const std::vector<SubrepPoint>& a, const std::vector<SubrepPoint>& b) {
  if (a.size() != b.size()) return false;
  std::set<std::string> sa, sb;
  for (const auto& p : a) sa.insert(to_string(p));
  for (const auto& p : b) sb.insert(to_string(p));
  return sa == sb && sa.size() == a.size();
}

inline FpRep builtin_mod(const std::string& name, long long q) { return reduce_mod_p(emit_builtin(name).rep, q); }

// Fixtures on which the tube pipeline should succeed.
inline std::vector<std::string> battery() {
  return {"kronecker-reg:1", "kronecker-reg:2", "kronecker-reg:3", "kronecker-reg:4",
          "a21-ex1",         "a21-ex3",         "a21-ray:3"};
}

}  // namespace qgr::oracle
