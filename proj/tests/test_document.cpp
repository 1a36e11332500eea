#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "qgr/document.hpp"

using namespace qgr;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("qgr_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + QGR_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

const char* kMinimal = R"({
  "quiver": {"vertices": ["1", "2"], "arrows": [{"id": "a", "from": "1", "to": "2"}]},
  "representation": {"dims": {"1": 1, "2": 2}, "matrices": {"a": [["1/2"], ["-3"]]}}
})";

}  // namespace

TEST_CASE("parse a minimal document", "[document]") {
  const InputDocument doc = parse_input_text(kMinimal);
  REQUIRE(doc.rep.quiver().num_vertices() == 2);
  REQUIRE(doc.rep.map(0)(0, 0) == Rational(1, 2));
  REQUIRE(doc.rep.map(0)(1, 0) == Rational(-3));
  REQUIRE(doc.name.empty());
}

TEST_CASE("builtins", "[document]") {
  const InputDocument ex1 = emit_builtin("a21-ex1");
  REQUIRE(ex1.rep.dims() == (DimVector(3) << 3, 3, 3).finished());
  REQUIRE(ex1.rep.map(0) == MatrixX<Rational>::Identity(3, 3));
  REQUIRE(ex1.rep.map(2) == MatrixX<Rational>::Identity(3, 3));
  MatrixX<Rational> j3 = MatrixX<Rational>::Zero(3, 3);
  j3(0, 1) = 1;
  j3(1, 2) = 1;
  REQUIRE(ex1.rep.map(1) == j3);

  const InputDocument ex3 = emit_builtin("a21-ex3");
  REQUIRE(ex3.rep.dims() == (DimVector(3) << 2, 2, 2).finished());

  const InputDocument kr = emit_builtin("kronecker-reg:2");
  REQUIRE(kr.rep.dims() == (DimVector(2) << 2, 2).finished());
  REQUIRE(kr.rep.map(0) == MatrixX<Rational>::Identity(2, 2));

  const InputDocument ray = emit_builtin("a21-ray:3");
  REQUIRE(ray.rep.dims() == (DimVector(3) << 1, 2, 1).finished());

  try {
    emit_builtin("nope");
    FAIL("expected an input error");
  } catch (const InputError& e) {
    REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("kronecker-reg:<n>"));
  }
  REQUIRE_THROWS_AS(emit_builtin("kronecker-reg:0"), InputError);
  REQUIRE_THROWS_AS(emit_builtin("kronecker-reg:x"), InputError);
}

TEST_CASE("round trip through JSON", "[document]") {
  for (const auto& name : {"a21-ex1", "a21-ex3", "kronecker-reg:3", "kronecker-preproj:2", "a21-ray:5"}) {
    const InputDocument doc = emit_builtin(name);
    const InputDocument back = parse_input_text(to_json(doc).dump(2));
    INFO(name);
    REQUIRE(back.rep == doc.rep);
    REQUIRE(back.name == doc.name);
    REQUIRE(back.notes == doc.notes);
    REQUIRE(input_digest(back) == input_digest(doc));
  }
  const fs::path p = write_file("ex3.json", to_json(emit_builtin("a21-ex3")).dump());
  REQUIRE(parse_input(p).rep == emit_builtin("a21-ex3").rep);
  REQUIRE_THROWS_AS(parse_input(scratch() / "missing.json"), InputError);
}

TEST_CASE("input errors carry diagnostics", "[document]") {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_input_text(text);
    } catch (const InputError& e) {
      return e.what();
    }
    return "";
  };
  SECTION("wrong row count names the arrow") {
    const std::string m = message(R"({"quiver": {"vertices": ["1", "2"], "arrows": [{"id": "alpha", "from": "1", "to": "2"}]},
      "representation": {"dims": {"1": 1, "2": 2}, "matrices": {"alpha": [["1"]]}}})");
    REQUIRE_THAT(m, Catch::Matchers::ContainsSubstring("\"alpha\""));
    REQUIRE_THAT(m, Catch::Matchers::ContainsSubstring("1 rows, expected 2"));
  }
  SECTION("cycle") {
    const std::string m = message(R"({"quiver": {"vertices": ["1", "2"], "arrows": [
      {"id": "a", "from": "1", "to": "2"}, {"id": "b", "from": "2", "to": "1"}]},
      "representation": {"dims": {"1": 1, "2": 1}, "matrices": {"a": [["1"]], "b": [["1"]]}}})");
    REQUIRE_THAT(m, Catch::Matchers::ContainsSubstring("cycl"));
  }
  SECTION("malformed JSON reports the line") {
    const std::string m = message("{\n  \"quiver\": {\n    \"vertices\": [\"1\",, ]\n}");
    REQUIRE_THAT(m, Catch::Matchers::ContainsSubstring("line 3"));
  }
  SECTION("bad rational names the entry") {
    const std::string m = message(R"({"quiver": {"vertices": ["1", "2"], "arrows": [{"id": "a", "from": "1", "to": "2"}]},
      "representation": {"dims": {"1": 1, "2": 1}, "matrices": {"a": [["1/0"]]}}})");
    REQUIRE_THAT(m, Catch::Matchers::ContainsSubstring("matrices.a[0][0]"));
  }
  SECTION("missing fields") {
    REQUIRE_THAT(message(R"({"quiver": {"vertices": []}})"), Catch::Matchers::ContainsSubstring("arrows"));
    REQUIRE_THAT(message("[]"), Catch::Matchers::ContainsSubstring("object"));
  }
}

TEST_CASE("CLI: documented runs", "[cli]") {
  SECTION("check on a21-ex1 succeeds") {
    const Run r = cli("check --builtin a21-ex1 --q 2,3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"]["verdict"] == true);
    REQUIRE(j["command"] == "check");
    REQUIRE(j["input"]["name"] == "a21-ex1");
  }
  SECTION("census of a21-ex3 block (0,1,1)") {
    const Run r = cli("census --builtin a21-ex3 --q 2 --e 0,1,1");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& block = j["results"][0]["blocks"][0];
    REQUIRE(block["total_points"] == 5);
    REQUIRE(block["transverse_points"] == 4);
  }
  SECTION("transverse, tube, chi and example") {
    REQUIRE(cli("transverse --builtin kronecker-reg:2 --q 2 --e 1,1").code == 0);
    const Run t = cli("tube --builtin kronecker-reg:2 --q 3");
    REQUIRE(t.code == 0);
    REQUIRE(nlohmann::json::parse(t.out)["results"][0]["tube"]["l"] == 2);
    const Run c = cli("chi --builtin a21-ex3 --e 0,1,1");
    REQUIRE(c.code == 0);
    REQUIRE(nlohmann::json::parse(c.out)["results"][0]["counting_polynomial"]["euler_characteristic"] == "3");
    const Run ex = cli("example --builtin a21-ex3");
    REQUIRE(ex.code == 0);
    REQUIRE(parse_input_text(ex.out).rep == emit_builtin("a21-ex3").rep);
    REQUIRE(cli("census --builtin a21-ex3 --q 2 --format table").code == 0);
  }
}

TEST_CASE("CLI: exit codes for errors", "[cli]") {
  const fs::path bad = write_file("malformed.json", "{ \"quiver\": ");
  REQUIRE(cli("check --input \"" + bad.string() + "\"").code == 2);
  REQUIRE(cli("check --builtin nope").code == 2);
  REQUIRE(cli("check --builtin a21-ex1 --q 4").code == 2);
  REQUIRE(cli("census --builtin a21-ex1 --e 1,2").code == 2);
  REQUIRE(cli("census --builtin a21-ex1 --e 4,0,0").code == 2);
  REQUIRE(cli("frobnicate").code == 2);
  REQUIRE(cli("census").code == 2);
  REQUIRE(cli("chi --builtin a21-ex3 --q 2,3").code == 2);

  // decomposable regular-looking input: the tube pipeline refuses it
  const fs::path dec = write_file("decomposable.json", R"({
    "quiver": {"vertices": ["1", "2"], "arrows": [{"id": "a", "from": "1", "to": "2"}, {"id": "b", "from": "1", "to": "2"}]},
    "representation": {"dims": {"1": 2, "2": 2}, "matrices": {"a": [["1", "0"], ["0", "1"]], "b": [["0", "0"], ["0", "0"]]}}
  })");
  const Run r = cli("check --input \"" + dec.string() + "\" --q 2");
  REQUIRE(r.code == 3);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("ambiguous quasi-socle"));
  REQUIRE(cli("tube --input \"" + dec.string() + "\" --q 2").code == 3);

  // q^2 + q + 1 cannot be fit from two samples
  const fs::path plane = write_file("plane.json", R"({
    "quiver": {"vertices": ["1"], "arrows": []},
    "representation": {"dims": {"1": 3}, "matrices": {}}
  })");
  const Run chi = cli("chi --input \"" + plane.string() + "\" --e 1");
  REQUIRE(chi.code == 3);
  REQUIRE_THAT(chi.out, Catch::Matchers::ContainsSubstring("raw_counts"));
  REQUIRE(cli("chi --input \"" + plane.string() + "\" --e 1 --q 2,3,5,7").code == 0);
}

TEST_CASE("CLI: reports are byte-identical across runs and thread counts", "[cli]") {
  for (const auto& args : {"census --builtin a21-ex1 --q 2,3", "check --builtin a21-ex3 --q 2,3", "tube --builtin a21-ex1"}) {
    const Run a = cli(std::string(args) + " --threads 1");
    const Run b = cli(std::string(args) + " --threads 4");
    const Run c = cli(std::string(args) + " --threads 1");
    INFO(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out == c.out);
  }
}
