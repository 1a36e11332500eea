#pragma once

// Exact scalar types used as Eigen coefficient types.
//
// Rational is a GMP-backed boost::multiprecision rational (always in lowest
// terms). Zp is a residue modulo a runtime prime; elements carry their
// modulus so that dense Eigen matrices over different prime fields can coexist.

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace qgr {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Residue class modulo a prime p.
//
// A Zp built from a bare integer (Zp(0), Zp(1), which is how Eigen spells its
// constants) is an unbound literal; it adopts the modulus of whatever bound
// element it is combined with. Combining two bound elements with different
// moduli throws std::domain_error.
class Zp {
 public:
  constexpr Zp() = default;
  constexpr Zp(long long literal) : v_(literal) {}  // NOLINT: Eigen needs implicit Scalar(int)
  Zp(long long value, std::uint32_t modulus);

  bool bound() const noexcept { return p_ != 0; }
  std::uint32_t modulus() const noexcept { return p_; }
  // Residue in [0, p) when bound; the raw literal otherwise.
  long long value() const noexcept { return v_; }

  Zp inverse() const;

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  Zp operator-() const;
  Zp operator+() const { return *this; }

  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

 private:
  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;

  static std::uint32_t common_modulus(const Zp& a, const Zp& b);
  Zp bound_to(std::uint32_t p) const;
};

std::ostream& operator<<(std::ostream& os, const Zp& x);

bool is_prime(long long n);

// Parses "n" or "n/m" (optional leading sign) exactly. Throws InputError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Image of r in F_p. Throws InputError if p divides the denominator.
Zp reduce_mod(const Rational& r, std::uint32_t p);

}  // namespace qgr

namespace Eigen {

template <>
struct NumTraits<qgr::Zp> : GenericNumTraits<qgr::Zp> {
  using Real = qgr::Zp;
  using NonInteger = qgr::Zp;
  using Literal = qgr::Zp;
  using Nested = qgr::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qgr {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<long long>;
using IntVector = VectorX<long long>;

}  // namespace qgr
