#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include "qgr/errors.hpp"
#include "qgr/scalar.hpp"

namespace qgr {

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t modulus = 0;  // meaningful only for PrimeField

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(long long p) {
    if (!is_prime(p) || p >= (1LL << 31)) throw InputError("not a supported prime: " + std::to_string(p));
    return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
  }

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string name() const { return is_prime_field() ? "F" + std::to_string(modulus) : "Q"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Scalar type matching a field kind.
template <class Scalar>
constexpr bool is_prime_scalar_v = std::is_same_v<Scalar, Zp>;

// The integer n as an element of `field`.
template <class Scalar>
Scalar field_element(const FieldSpec& field, long long n) {
  if constexpr (is_prime_scalar_v<Scalar>) {
    return Zp(n, field.modulus);
  } else {
    return Scalar(n);
  }
}

template <class Scalar>
void check_scalar_matches(const FieldSpec& field) {
  if (is_prime_scalar_v<Scalar> != field.is_prime_field())
    throw InputError("field " + field.name() + " does not match the coefficient type");
}

}  // namespace qgr
