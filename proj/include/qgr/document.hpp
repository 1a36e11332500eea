#pragma once

// JSON input documents and the built-in example generators.
//
// Format (UTF-8 JSON, rationals as strings "n" or "n/m"):
//
//   {
//     "name": "a21-ex3",                       (optional)
//     "notes": "...",                          (optional)
//     "quiver": {
//       "vertices": ["1", "2", "3"],
//       "arrows": [{"id": "a", "from": "1", "to": "2"}, ...]
//     },
//     "representation": {
//       "dims": {"1": 2, "2": 2, "3": 2},
//       "matrices": {"a": [["1", "0"], ["0", "1"]], ...}
//     }
//   }
//
// The matrix of an arrow i -> j has dims[j] rows and dims[i] columns and acts
// on column vectors.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgr/representation.hpp"

namespace qgr {

struct InputDocument {
  std::string name;
  std::string notes;
  RationalRep rep;
};

InputDocument parse_input_text(const std::string& text);
InputDocument parse_input(const std::filesystem::path& path);

nlohmann::json to_json(const InputDocument& doc);

// FNV-1a digest of the canonical serialization of the document's quiver and
// representation (name and notes excluded).
std::string input_digest(const InputDocument& doc);

// a21-ex1, a21-ex3, a21-ray:t, kronecker-reg:n, kronecker-preproj:n
InputDocument emit_builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace qgr
