#include "qgr/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgr {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

Rational parse_entry(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw InputError(where + ": expected a rational string \"n\" or \"n/m\"");
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

MatrixX<Rational> identity(Index n) { return MatrixX<Rational>::Identity(n, n); }

MatrixX<Rational> jordan_nilpotent(Index n) {
  MatrixX<Rational> j = MatrixX<Rational>::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

std::shared_ptr<const Quiver> a21_quiver() {
  return std::make_shared<const Quiver>(
      Quiver::from_ids({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}}));
}

std::shared_ptr<const Quiver> kronecker_quiver() {
  return std::make_shared<const Quiver>(Quiver::from_ids({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}));
}

// R_0^{(t)} in the rank-2 tube of the A~_{2,1} quiver with quasi-socle (0,1,0):
// dims (a, b, a) with a = t div 2, b = t - a; 1->2 includes the first a
// coordinates, 2->3 shifts e_j to e_{j-1}, 1->3 is the identity.
InputDocument a21_ray(long long t) {
  const Index a = t / 2, b = t - a;
  MatrixX<Rational> inc = MatrixX<Rational>::Zero(b, a);
  for (Index i = 0; i < a; ++i) inc(i, i) = 1;
  MatrixX<Rational> shift = MatrixX<Rational>::Zero(a, b);
  for (Index j = 1; j < b; ++j)
    if (j - 1 < a) shift(j - 1, j) = 1;
  DimVector dims(3);
  dims << a, b, a;
  return {"a21-ray:" + std::to_string(t), "",
          RationalRep(a21_quiver(), FieldSpec::rationals(), dims, {inc, shift, identity(a)})};
}

long long parse_size_suffix(const std::string& name, const std::string& prefix) {
  const std::string tail = name.substr(prefix.size());
  if (tail.empty() || tail.size() > 3 || tail.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("builtin \"" + name + "\": expected a positive integer after \"" + prefix + "\"");
  const long long n = std::stoll(tail);
  if (n < 1) throw InputError("builtin \"" + name + "\": size must be at least 1");
  return n;
}

}  // namespace

InputDocument parse_input_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // locate the byte offset as line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
  if (!doc.is_object()) throw InputError("document: expected a JSON object");

  InputDocument out;
  if (auto it = doc.find("name"); it != doc.end()) out.name = require_string(*it, "name");
  if (auto it = doc.find("notes"); it != doc.end()) out.notes = require_string(*it, "notes");

  const json& qj = require(doc, "quiver", "document");
  const json& vj = require(qj, "vertices", "quiver");
  if (!vj.is_array()) throw InputError("quiver.vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vj.size(); ++i) vertices.push_back(require_string(vj[i], "quiver.vertices[" + std::to_string(i) + "]"));

  const json& aj = require(qj, "arrows", "quiver");
  if (!aj.is_array()) throw InputError("quiver.arrows: expected an array");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const std::string where = "quiver.arrows[" + std::to_string(i) + "]";
    arrows.emplace_back(require_string(require(aj[i], "id", where), where + ".id"),
                        require_string(require(aj[i], "from", where), where + ".from"),
                        require_string(require(aj[i], "to", where), where + ".to"));
  }
  auto quiver = std::make_shared<const Quiver>(Quiver::from_ids(vertices, arrows));

  const json& rj = require(doc, "representation", "document");
  const json& dj = require(rj, "dims", "representation");
  if (!dj.is_object()) throw InputError("representation.dims: expected an object mapping vertex to dimension");
  DimVector dims = DimVector::Zero(quiver->num_vertices());
  for (auto it = dj.begin(); it != dj.end(); ++it) {
    const Index v = quiver->vertex_index(it.key());
    if (!it->is_number_integer() || it->get<long long>() < 0)
      throw InputError("representation.dims." + it.key() + ": expected a nonnegative integer");
    dims(v) = it->get<long long>();
  }
  for (const auto& v : quiver->vertices())
    if (!dj.contains(v)) throw InputError("representation.dims: missing vertex \"" + v + "\"");

  const json& mj = require(rj, "matrices", "representation");
  if (!mj.is_object()) throw InputError("representation.matrices: expected an object mapping arrow id to matrix");
  for (auto it = mj.begin(); it != mj.end(); ++it) {
    bool known = false;
    for (const auto& a : quiver->arrows()) known = known || a.id == it.key();
    if (!known) throw InputError("representation.matrices: unknown arrow \"" + it.key() + "\"");
  }
  std::vector<MatrixX<Rational>> maps;
  for (const auto& a : quiver->arrows()) {
    const std::string where = "representation.matrices." + a.id;
    auto it = mj.find(a.id);
    if (it == mj.end()) throw InputError("representation.matrices: missing matrix for arrow \"" + a.id + "\"");
    const Index rows = dims(a.target), cols = dims(a.source);
    if (!it->is_array()) throw InputError(where + ": expected an array of rows");
    if (static_cast<Index>(it->size()) != rows)
      throw InputError("matrix for arrow \"" + a.id + "\" has " + std::to_string(it->size()) + " rows, expected " +
                       std::to_string(rows) + " (dimension at target \"" + quiver->vertices()[static_cast<std::size_t>(a.target)] + "\")");
    MatrixX<Rational> m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const json& row = (*it)[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != cols)
        throw InputError("matrix for arrow \"" + a.id + "\" row " + std::to_string(r) + " has the wrong length, expected " +
                         std::to_string(cols) + " (dimension at source \"" + quiver->vertices()[static_cast<std::size_t>(a.source)] + "\")");
      for (Index c = 0; c < cols; ++c)
        m(r, c) = parse_entry(row[static_cast<std::size_t>(c)], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    maps.push_back(std::move(m));
  }
  out.rep = RationalRep(std::move(quiver), FieldSpec::rationals(), std::move(dims), std::move(maps));
  return out;
}

InputDocument parse_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str());
}

json to_json(const InputDocument& doc) {
  const Quiver& q = doc.rep.quiver();
  json out;
  if (!doc.name.empty()) out["name"] = doc.name;
  if (!doc.notes.empty()) out["notes"] = doc.notes;
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id},
                      {"from", q.vertices()[static_cast<std::size_t>(a.source)]},
                      {"to", q.vertices()[static_cast<std::size_t>(a.target)]}});
  out["quiver"] = {{"vertices", q.vertices()}, {"arrows", arrows}};
  json dims = json::object();
  for (Index i = 0; i < q.num_vertices(); ++i) dims[q.vertices()[static_cast<std::size_t>(i)]] = doc.rep.dims()(i);
  json mats = json::object();
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& m = doc.rep.map(k);
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(row);
    }
    mats[q.arrows()[k].id] = rows;
  }
  out["representation"] = {{"dims", dims}, {"matrices", mats}};
  return out;
}

std::string input_digest(const InputDocument& doc) {
  json body = to_json(doc);
  body.erase("name");
  body.erase("notes");
  return fnv1a(body.dump());
}

InputDocument emit_builtin(const std::string& name) {
  if (name == "a21-ex1") {
    InputDocument d = a21_ray(6);
    d.name = name;
    d.notes = "A~_{2,1}, dims (3,3,3), matrices I, J_3(0), I";
    return d;
  }
  if (name == "a21-ex3") {
    InputDocument d = a21_ray(4);
    d.name = name;
    d.notes = "A~_{2,1}, dims (2,2,2), matrices I, J_2(0), I";
    return d;
  }
  if (name.rfind("a21-ray:", 0) == 0) return a21_ray(parse_size_suffix(name, "a21-ray:"));
  if (name.rfind("kronecker-reg:", 0) == 0) {
    const Index n = parse_size_suffix(name, "kronecker-reg:");
    DimVector dims(2);
    dims << n, n;
    return {name, "Kronecker, dims (n,n), matrices I_n and J_n(0)",
            RationalRep(kronecker_quiver(), FieldSpec::rationals(), dims, {identity(n), jordan_nilpotent(n)})};
  }
  if (name.rfind("kronecker-preproj:", 0) == 0) {
    const Index n = parse_size_suffix(name, "kronecker-preproj:");
    DimVector dims(2);
    dims << n, n + 1;
    MatrixX<Rational> top = MatrixX<Rational>::Zero(n + 1, n), bottom = MatrixX<Rational>::Zero(n + 1, n);
    for (Index i = 0; i < n; ++i) {
      top(i, i) = 1;
      bottom(i + 1, i) = 1;
    }
    return {name, "Kronecker, dims (n,n+1), the two standard inclusions",
            RationalRep(kronecker_quiver(), FieldSpec::rationals(), dims, {top, bottom})};
  }
  std::string valid;
  for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw InputError("unknown builtin \"" + name + "\"; valid names: " + valid);
}

std::vector<std::string> builtin_names() {
  return {"a21-ex1", "a21-ex3", "a21-ray:<t>", "kronecker-reg:<n>", "kronecker-preproj:<n>"};
}

}  // namespace qgr
