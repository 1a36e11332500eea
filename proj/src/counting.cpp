#include "qgr/counting.hpp"

#include <set>

namespace qgr {

BigInt CountingPolynomial::evaluate(long long q) const {
  BigInt v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * q + *it;
  return v;
}

BigInt count_points(const RationalRep& m, const DimVector& e, long long q) {
  return BigInt(enumerate_subreps(reduce_mod_p(m, q), e).size());
}

namespace {

std::string raw_counts(const std::vector<PointCount>& counts) {
  std::string s;
  for (const auto& c : counts) s += (s.empty() ? "" : ", ") + ("q=" + std::to_string(c.q) + ": " + c.count.str());
  return s;
}

}  // namespace

CountingPolynomial counting_polynomial(const RationalRep& m, const DimVector& e,
                                       const std::vector<long long>& sample_primes, long long check_prime) {
  if (sample_primes.size() < 2) throw InputError("counting polynomial needs at least two sample primes");
  std::set<long long> distinct(sample_primes.begin(), sample_primes.end());
  distinct.insert(check_prime);
  if (distinct.size() != sample_primes.size() + 1) throw InputError("sample and check primes must be distinct");

  CountingPolynomial poly;
  for (long long q : sample_primes) poly.samples.push_back({q, count_points(m, e, q)});
  poly.check = {check_prime, count_points(m, e, check_prime)};
  std::vector<PointCount> all = poly.samples;
  all.push_back(poly.check);

  // Lagrange basis polynomials accumulated in ascending coefficient order.
  const std::size_t n = poly.samples.size();
  std::vector<Rational> coeff(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational xj(poly.samples[j].q);
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xj * basis[k];
      }
      basis = std::move(next);
      denom *= Rational(poly.samples[i].q) - xj;
    }
    const Rational scale = Rational(poly.samples[i].count) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeff[k] += scale * basis[k];
  }

  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  for (const Rational& c : coeff) {
    if (boost::multiprecision::denominator(c) != 1)
      throw PipelineError(PipelineError::Kind::NotPolynomial,
                          "count not polynomial on sampled range (non-integer coefficient); counts " + raw_counts(all));
    poly.coefficients.push_back(boost::multiprecision::numerator(c));
  }
  if (poly.evaluate(check_prime) != poly.check.count)
    throw PipelineError(PipelineError::Kind::NotPolynomial,
                        "count not polynomial on sampled range; counts " + raw_counts(all));
  poly.degree = static_cast<long long>(poly.coefficients.size()) - 1;
  poly.euler_characteristic = poly.evaluate(1);
  return poly;
}

std::string to_string(const CountingPolynomial& p) {
  if (p.coefficients.empty()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients.size(); k-- > 0;) {
    const BigInt& c = p.coefficients[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool show = k == 0 || mag != 1;
    if (show) out += mag.str();
    if (k >= 1) out += (show ? "*q" : "q");
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace qgr
