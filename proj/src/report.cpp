#include "qgr/report.hpp"

#include <sstream>

namespace qgr {

using nlohmann::json;

json to_json(const DimVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const SubrepPoint& p) {
  json out = json::array();
  for (const auto& s : p.spaces) {
    json rows = json::array();
    for (Index r = 0; r < s.dim(); ++r) {
      json row = json::array();
      for (Index c = 0; c < s.ambient_dim(); ++c) row.push_back(s.basis()(r, c).value());
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return out;
}

json to_json(const CensusReport& report, bool with_entries) {
  json blocks = json::array();
  for (const auto& b : report.blocks) {
    json jb = {{"e", to_json(b.e)},
               {"expected_dim", b.expected_dim},
               {"total_points", b.total_points()},
               {"transverse_points", b.transverse_points()}};
    if (with_entries) {
      json entries = json::array();
      for (const auto& e : b.entries) {
        json je = {{"point", to_json(e.point)},
                   {"hom_dim", e.hom_dim},
                   {"ext_dim", e.ext_dim},
                   {"tangent_dim", tangent_dim(e)},
                   {"transverse", e.homologically_transverse}};
        if (e.comb_flags)
          je["comb_flags"] = {{"contains_lower", e.comb_flags->contains_lower},
                              {"contained_in_upper", e.comb_flags->contained_in_upper}};
        entries.push_back(je);
      }
      jb["entries"] = entries;
    }
    blocks.push_back(jb);
  }
  return {{"q", report.q},
          {"dims", to_json(report.dims)},
          {"representation_digest", report.rep_digest},
          {"blocks", blocks},
          {"total_points", report.total_points()},
          {"transverse_points", report.transverse_points()}};
}

json to_json(const TubeData& tube) {
  json rays = json::array();
  for (const auto& d : tube.ray_dims) rays.push_back(to_json(d));
  return {{"quasi_socle_dim", to_json(tube.quasi_socle_dim)},
          {"tube_rank", tube.tube_rank},
          {"quasi_length", tube.quasi_length},
          {"l", tube.l},
          {"k", tube.k},
          {"ray_dims", rays}};
}

json to_json(const TransverseComparison& cmp) {
  json fields = json::array();
  for (const auto& f : cmp.fields) {
    json jf = {{"q", f.q}, {"equal", f.equal}};
    if (f.error) {
      jf["error"] = *f.error;
    } else {
      jf["rigid"] = f.rigid;
      jf["vacuous_exclusion"] = f.vacuous;
      if (f.tube) jf["tube"] = to_json(*f.tube);
      json blocks = json::array();
      for (const auto& b : f.blocks)
        blocks.push_back({{"e", to_json(b.e)},
                          {"total_points", b.total_points},
                          {"combinatorial", b.combinatorial},
                          {"homological", b.homological},
                          {"equal", b.equal}});
      jf["blocks"] = blocks;
    }
    fields.push_back(jf);
  }
  json ces = json::array();
  for (const auto& c : cmp.counterexamples)
    ces.push_back({{"q", c.q},
                   {"e", to_json(c.e)},
                   {"point", to_json(c.point)},
                   {"ext_dim", c.ext_dim},
                   {"contains_lower", c.flags.contains_lower},
                   {"contained_in_upper", c.flags.contained_in_upper}});
  return {{"verdict", cmp.verdict}, {"fields", fields}, {"counterexamples", ces}};
}

json to_json(const CountingPolynomial& poly) {
  json coeffs = json::array();
  for (const auto& c : poly.coefficients) coeffs.push_back(c.str());
  json samples = json::array();
  for (const auto& s : poly.samples) samples.push_back({{"q", s.q}, {"count", s.count.str()}});
  return {{"coefficients", coeffs},
          {"polynomial", to_string(poly)},
          {"samples", samples},
          {"check", {{"q", poly.check.q}, {"count", poly.check.count.str()}}},
          {"euler_characteristic", poly.euler_characteristic.str()},
          {"degree", poly.degree}};
}

std::string render_table(const CensusReport& report) {
  std::ostringstream os;
  os << "q = " << report.q << "  dims " << to_string(report.dims) << "\n";
  os << "  e            <e,d-e>  points  transverse\n";
  for (const auto& b : report.blocks) {
    std::string e = to_string(b.e);
    e.resize(std::max<std::size_t>(e.size(), 12), ' ');
    os << "  " << e << " " << b.expected_dim << "\t" << b.total_points() << "\t" << b.transverse_points() << "\n";
    for (const auto& entry : b.entries)
      os << "      " << to_string(entry.point) << "  hom " << entry.hom_dim << "  ext " << entry.ext_dim << "\n";
  }
  os << "  total " << report.total_points() << " points, " << report.transverse_points() << " transverse\n";
  return os.str();
}

std::string render_table(const TubeData& tube) {
  std::ostringstream os;
  os << "quasi-socle " << to_string(tube.quasi_socle_dim) << "  rank p = " << tube.tube_rank
     << "  quasi-length = " << tube.quasi_length << "  (l, k) = (" << tube.l << ", " << tube.k << ")\n";
  for (std::size_t t = 1; t < tube.ray_dims.size(); ++t) os << "  R0^(" << t << ")  " << to_string(tube.ray_dims[t]) << "\n";
  return os.str();
}

std::string render_table(const TransverseComparison& cmp) {
  std::ostringstream os;
  for (const auto& f : cmp.fields) {
    os << "q = " << f.q << ": ";
    if (f.error) {
      os << "ERROR " << *f.error << "\n";
      continue;
    }
    os << (f.equal ? "equal" : "DIFFERENT") << (f.rigid ? " (rigid)" : "") << "\n";
    if (f.tube) os << "  " << render_table(*f.tube);
    for (const auto& b : f.blocks)
      if (b.total_points)
        os << "  e " << to_string(b.e) << "  points " << b.total_points << "  combinatorial " << b.combinatorial.size()
           << "  homological " << b.homological.size() << (b.equal ? "" : "  MISMATCH") << "\n";
  }
  os << "verdict: " << (cmp.verdict ? "true" : "false") << "\n";
  for (const auto& c : cmp.counterexamples)
    os << "  counterexample q=" << c.q << " e=" << to_string(c.e) << " " << to_string(c.point) << " ext " << c.ext_dim
       << "\n";
  return os.str();
}

std::string render_table(const CountingPolynomial& poly) {
  std::ostringstream os;
  for (const auto& s : poly.samples) os << "q = " << s.q << ": " << s.count << " points\n";
  os << "check q = " << poly.check.q << ": " << poly.check.count << " points\n";
  os << "polynomial " << to_string(poly) << "  degree " << poly.degree << "  chi " << poly.euler_characteristic << "\n";
  return os.str();
}

}  // namespace qgr
