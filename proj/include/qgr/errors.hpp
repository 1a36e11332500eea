#pragma once

#include <stdexcept>
#include <string>

namespace qgr {

// Malformed or inconsistent user input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural assumption about the input failed while analysing it
// (ambiguous quasi-socle, non-unique ray submodule, ...). Exit code 3.
class PipelineError : public std::runtime_error {
 public:
  enum class Kind {
    NotRegular,
    AmbiguousQuasiSocle,
    NotOnRay,
    RigidRegular,
    RayAmbiguity,
    Decomposable,
    NotAffine,
    NotPolynomial,
    Invariant,
  };

  PipelineError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace qgr
