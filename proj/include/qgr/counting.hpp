#pragma once

#include <vector>

#include "qgr/census.hpp"

namespace qgr {

struct PointCount {
  long long q = 0;
  BigInt count = 0;
};

/// Interpolated point-count polynomial of Gr_e(M) over F_q.
struct CountingPolynomial {
  std::vector<BigInt> coefficients;  // ascending powers of q; empty for the zero polynomial
  std::vector<PointCount> samples;   // used for interpolation
  PointCount check;                  // extra sample the polynomial must reproduce
  BigInt euler_characteristic = 0;   // value at q = 1
  long long degree = -1;             // advisory dimension estimate

  BigInt evaluate(long long q) const;
};

// |Gr_e(M)(F_q)| via enumerate_subreps on the reduction of m modulo q.
BigInt count_points(const RationalRep& m, const DimVector& e, long long q);

// Lagrange interpolation through `sample_primes`, validated at `check_prime`.
// Throws PipelineError(NotPolynomial) listing the raw counts if the check
// sample disagrees or an interpolated coefficient is not an integer.
CountingPolynomial counting_polynomial(const RationalRep& m, const DimVector& e,
                                       const std::vector<long long>& sample_primes, long long check_prime);

std::string to_string(const CountingPolynomial& p);

}  // namespace qgr
