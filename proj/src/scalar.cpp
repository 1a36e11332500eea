#include "qgr/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "qgr/errors.hpp"

namespace qgr {

namespace {

std::int64_t mod(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

Zp::Zp(long long value, std::uint32_t modulus) : v_(0), p_(modulus) {
  if (modulus < 2) throw std::domain_error("Zp: modulus must be >= 2");
  v_ = mod(value, modulus);
}

std::uint32_t Zp::common_modulus(const Zp& a, const Zp& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
  throw std::domain_error("Zp: mixing residues of different moduli");
}

Zp Zp::bound_to(std::uint32_t p) const {
  if (p == 0 || p_ == p) return *this;
  return Zp(v_, p);
}

Zp& Zp::operator+=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ += o.v_;
    return *this;
  }
  *this = bound_to(p);
  v_ += o.bound_to(p).v_;
  if (v_ >= p) v_ -= p;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ -= o.v_;
    return *this;
  }
  *this = bound_to(p);
  v_ -= o.bound_to(p).v_;
  if (v_ < 0) v_ += p;
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ *= o.v_;
    return *this;
  }
  *this = bound_to(p);
  v_ = (v_ * o.bound_to(p).v_) % p;
  return *this;
}

Zp Zp::operator-() const {
  if (p_ == 0) return Zp(-v_);
  return Zp(v_ == 0 ? 0 : p_ - v_, p_);
}

Zp Zp::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::domain_error("Zp: cannot invert an unbound literal");
  }
  if (v_ == 0) throw std::domain_error("Zp: division by zero");
  // extended Euclid on (v, p)
  std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Zp(s0, p_);
}

bool operator==(const Zp& a, const Zp& b) {
  const std::uint32_t p = Zp::common_modulus(a, b);
  if (p == 0) return a.v_ == b.v_;
  return a.bound_to(p).v_ == b.bound_to(p).v_;
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw InputError("malformed rational \"" + text + "\"");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw InputError("malformed rational \"" + text + "\"");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, true));
  const BigInt num = parse_int(text.substr(0, slash), true);
  const BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw InputError("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

Zp reduce_mod(const Rational& r, std::uint32_t p) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt bp(p);
  BigInt dr = den % bp;
  if (dr == 0)
    throw InputError("denominator of " + r.str() + " is divisible by " + std::to_string(p));
  BigInt nr = num % bp;
  if (nr < 0) nr += bp;
  return Zp(nr.convert_to<long long>(), p) / Zp(dr.convert_to<long long>(), p);
}

}  // namespace qgr
