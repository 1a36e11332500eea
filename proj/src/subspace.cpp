#include "qgr/subspace.hpp"

namespace qgr {

BigInt gaussian_binomial(long long d, long long e, long long q) {
  if (e < 0 || e > d) throw InputError("gaussian_binomial: need 0 <= e <= d");
  if (q < 2) throw InputError("gaussian_binomial: need q >= 2");
  BigInt num = 1, den = 1;
  const BigInt bq(q);
  for (long long i = 0; i < e; ++i) {
    num *= boost::multiprecision::pow(bq, static_cast<unsigned>(d - i)) - 1;
    den *= boost::multiprecision::pow(bq, static_cast<unsigned>(e - i)) - 1;
  }
  return num / den;
}

std::vector<FpSubspace> enumerate_subspaces(Index ambient_dim, Index dim, const FieldSpec& field) {
  if (!field.is_prime_field()) throw InputError("enumerate_subspaces: needs a prime field");
  if (dim < 0 || ambient_dim < 0 || dim > ambient_dim)
    throw InputError("enumerate_subspaces: need 0 <= e <= d, got e=" + std::to_string(dim) +
                     " d=" + std::to_string(ambient_dim));
  const std::uint32_t q = field.modulus;
  std::vector<FpSubspace> out;

  std::vector<Index> pivots(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) pivots[static_cast<std::size_t>(i)] = i;

  while (true) {
    // free entries of this Schubert cell, row-major
    std::vector<std::pair<Index, Index>> free;
    for (Index r = 0; r < dim; ++r) {
      std::size_t next = static_cast<std::size_t>(r) + 1;
      for (Index c = pivots[static_cast<std::size_t>(r)] + 1; c < ambient_dim; ++c) {
        if (next < pivots.size() && pivots[next] == c) {
          ++next;
          continue;
        }
        free.emplace_back(r, c);
      }
    }

    MatrixX<Zp> cell = MatrixX<Zp>::Constant(dim, ambient_dim, Zp(0, q));
    for (Index r = 0; r < dim; ++r) cell(r, pivots[static_cast<std::size_t>(r)]) = Zp(1, q);

    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) cell(free[i].first, free[i].second) = Zp(digits[i], q);
      out.push_back(FpSubspace::from_rref(cell));
      std::size_t i = free.size();
      while (i > 0 && ++digits[i - 1] == q) digits[--i] = 0;
      if (i == 0) break;
    }

    // next pivot set in lexicographic order
    Index i = dim - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == ambient_dim - dim + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < dim; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace qgr
