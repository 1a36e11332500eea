// qgr: quiver Grassmannians of affine quiver representations over finite fields.
//
// Exit codes: 0 success (for `check`: verdict true), 1 `check` found a
// counterexample, 2 input or usage error, 3 internal assertion failure.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qgr/counting.hpp"
#include "qgr/document.hpp"
#include "qgr/report.hpp"
#include "qgr/tube.hpp"

namespace {

using namespace qgr;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string input;
  std::string builtin;
  std::string q_list;
  std::string e_list;
  bool all_e = false;
  std::string format = "json";
  unsigned threads = 1;
  bool timing = false;
  bool list = false;
};

std::vector<long long> parse_primes(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--q: \"" + item + "\" is not an integer");
    }
    FieldSpec::prime(p);
    out.push_back(p);
  }
  if (out.empty()) throw InputError("--q: empty prime list");
  return out;
}

DimVector parse_dim_vector(const std::string& text, const Quiver& q) {
  std::vector<long long> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--e: \"" + item + "\" is not an integer");
    }
  }
  if (static_cast<Index>(vals.size()) != q.num_vertices())
    throw InputError("--e: expected " + std::to_string(q.num_vertices()) + " entries");
  DimVector e(q.num_vertices());
  for (std::size_t i = 0; i < vals.size(); ++i) e(static_cast<Index>(i)) = vals[i];
  return e;
}

InputDocument load(const Options& o) {
  if (o.input.empty() == o.builtin.empty()) throw InputError("exactly one of --input or --builtin is required");
  return o.builtin.empty() ? parse_input(o.input) : emit_builtin(o.builtin);
}

std::vector<DimVector> selected_es(const Options& o, const RationalRep& m) {
  if (!o.e_list.empty()) {
    if (o.all_e) throw InputError("--e and --all-e are mutually exclusive");
    const DimVector e = parse_dim_vector(o.e_list, m.quiver());
    for (Index i = 0; i < e.size(); ++i)
      if (e(i) < 0 || e(i) > m.dims()(i))
        throw InputError("--e: " + to_string(e) + " is not bounded by " + to_string(m.dims()));
    return {e};
  }
  return all_dimension_vectors(m.dims());
}

int emit(const Options& o, json report, const std::string& table) {
  if (o.format == "table")
    std::cout << table;
  else
    std::cout << report.dump(2) << "\n";
  return 0;
}

json skeleton(const std::string& command, const InputDocument& doc, const Options& o, const std::vector<long long>& qs) {
  json params = {{"q", qs}};
  if (!o.e_list.empty())
    params["e"] = to_json(parse_dim_vector(o.e_list, doc.rep.quiver()));
  else
    params["e"] = "all";
  return {{"tool", "qgr"},
          {"version", kVersion},
          {"command", command},
          {"input", {{"name", doc.name}, {"digest", input_digest(doc)}, {"dims", to_json(doc.rep.dims())}}},
          {"parameters", params}};
}

int run_census(const Options& o, bool transverse_only) {
  const InputDocument doc = load(o);
  const auto qs = parse_primes(o.q_list.empty() ? "2,3" : o.q_list);
  const auto es = selected_es(o, doc.rep);
  json report = skeleton(transverse_only ? "transverse" : "census", doc, o, qs);
  json results = json::array();
  std::string table;
  for (long long q : qs) {
    const CensusReport cr = census(reduce_mod_p(doc.rep, q), es, {o.threads});
    if (transverse_only) {
      json blocks = json::array();
      table += "q = " + std::to_string(q) + "\n";
      for (const auto& b : cr.blocks) {
        json pts = json::array();
        for (const auto& p : transverse_homological(cr, b.e)) pts.push_back(to_json(p));
        table += "  e " + to_string(b.e) + "  " + std::to_string(pts.size()) + " of " +
                 std::to_string(b.total_points()) + " transverse\n";
        blocks.push_back({{"e", to_json(b.e)}, {"total_points", b.total_points()}, {"transverse", pts}});
      }
      results.push_back({{"q", q}, {"blocks", blocks}});
    } else {
      results.push_back(to_json(cr));
      table += render_table(cr);
    }
  }
  report["results"] = results;
  return emit(o, report, table);
}

int run_tube(const Options& o) {
  const InputDocument doc = load(o);
  const auto qs = parse_primes(o.q_list.empty() ? "2,3" : o.q_list);
  json report = skeleton("tube", doc, o, qs);
  json results = json::array();
  std::string table;
  int code = 0;
  for (long long q : qs) {
    const FpRep m = reduce_mod_p(doc.rep, q);
    json r = {{"q", q}};
    table += "q = " + std::to_string(q) + ": ";
    try {
      const CensusReport cr = census_all(m, {o.threads});
      const CombinatorialLocus locus = transverse_combinatorial(m, cr);
      r["rigid"] = locus.rigid;
      if (locus.rigid) {
        table += "rigid; transverse locus is all of Gr(M)\n";
      } else {
        r["tube"] = to_json(*locus.tube);
        json rays = json::array();
        for (long long t = 1; t <= locus.tube->quasi_length; ++t)
          rays.push_back(to_json(canonical_ray_submodule(*locus.tube, t, cr)));
        r["ray_submodules"] = rays;
        r["lower"] = to_json(*locus.lower);
        r["upper"] = to_json(*locus.upper);
        r["vacuous_exclusion"] = locus.vacuous;
        table += "\n  " + render_table(*locus.tube);
        if (locus.vacuous) table += "  lp-1 < k+1: nothing excluded\n";
      }
    } catch (const PipelineError& err) {
      r["error"] = err.what();
      table += std::string("ERROR ") + err.what() + "\n";
      code = 3;
    }
    results.push_back(r);
  }
  report["results"] = results;
  emit(o, report, table);
  return code;
}

int run_check(const Options& o) {
  const InputDocument doc = load(o);
  const auto qs = parse_primes(o.q_list.empty() ? "2,3" : o.q_list);
  const auto start = std::chrono::steady_clock::now();
  const TransverseComparison cmp = theorem_check(doc.rep, qs, {o.threads});
  json report = skeleton("check", doc, o, qs);
  report["results"] = to_json(cmp);
  if (o.timing)
    report["timing_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(o, report, render_table(cmp));
  if (cmp.pipeline_failed()) return 3;
  return cmp.verdict ? 0 : 1;
}

int run_chi(const Options& o) {
  const InputDocument doc = load(o);
  const auto qs = parse_primes(o.q_list.empty() ? "2,3,5" : o.q_list);
  if (qs.size() < 3) throw InputError("chi needs at least two sample primes plus one check prime (e.g. --q 2,3,5)");
  const std::vector<long long> samples(qs.begin(), qs.end() - 1);
  json report = skeleton("chi", doc, o, qs);
  json results = json::array();
  std::string table;
  int code = 0;
  for (const auto& e : selected_es(o, doc.rep)) {
    json r = {{"e", to_json(e)}};
    table += "e " + to_string(e) + ": ";
    try {
      const CountingPolynomial poly = counting_polynomial(doc.rep, e, samples, qs.back());
      r["counting_polynomial"] = to_json(poly);
      table += to_string(poly) + "  chi " + poly.euler_characteristic.str() + "  degree " +
               std::to_string(poly.degree) + "\n";
    } catch (const PipelineError& err) {
      json counts = json::array();
      for (long long q : qs) counts.push_back({{"q", q}, {"count", count_points(doc.rep, e, q).str()}});
      r["error"] = err.what();
      r["raw_counts"] = counts;
      table += std::string("ERROR ") + err.what() + "\n";
      code = 3;
    }
    results.push_back(r);
  }
  report["results"] = results;
  emit(o, report, table);
  return code;
}

int run_example(const Options& o) {
  if (o.list) {
    for (const auto& n : builtin_names()) std::cout << n << "\n";
    return 0;
  }
  if (o.builtin.empty()) throw InputError("example needs --builtin <name> or --list");
  std::cout << to_json(emit_builtin(o.builtin)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver Grassmannians, transverse loci and Ext computations over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_e) {
    sub->add_option("--input", o.input, "JSON input document");
    sub->add_option("--builtin", o.builtin, "built-in example (see `example --list`)");
    sub->add_option("--q", o.q_list, "comma-separated primes");
    if (with_e) {
      sub->add_option("--e", o.e_list, "comma-separated dimension vector");
      sub->add_flag("--all-e", o.all_e, "every dimension vector (default)");
    }
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", o.threads, "worker threads for the census")->check(CLI::Range(1u, 256u));
  };

  auto* census_cmd = app.add_subcommand("census", "enumerate Gr_e(M) with Hom/Ext data per point");
  add_common(census_cmd, true);
  auto* transverse_cmd = app.add_subcommand("transverse", "points with Ext^1(N, M/N) = 0 (any acyclic quiver)");
  add_common(transverse_cmd, true);
  auto* tube_cmd = app.add_subcommand("tube", "tube coordinates and canonical ray submodules");
  add_common(tube_cmd, false);
  auto* check_cmd = app.add_subcommand("check", "compare combinatorial and homological transverse loci");
  add_common(check_cmd, false);
  check_cmd->add_flag("--timing", o.timing, "include wall-clock timing in the report");
  auto* chi_cmd = app.add_subcommand("chi", "counting polynomial and Euler characteristic");
  add_common(chi_cmd, true);
  auto* example_cmd = app.add_subcommand("example", "print a built-in input document");
  example_cmd->add_option("--builtin", o.builtin, "built-in name");
  example_cmd->add_flag("--list", o.list, "list built-in names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census_cmd->parsed()) return run_census(o, false);
    if (transverse_cmd->parsed()) return run_census(o, true);
    if (tube_cmd->parsed()) return run_tube(o);
    if (check_cmd->parsed()) return run_check(o);
    if (chi_cmd->parsed()) return run_chi(o);
    if (example_cmd->parsed()) return run_example(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PipelineError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
