#include "qgr/representation.hpp"

namespace qgr {

FpRep reduce_mod_p(const RationalRep& m, long long p) {
  const FieldSpec field = FieldSpec::prime(p);
  std::vector<MatrixX<Zp>> maps;
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& src = m.map(k);
    MatrixX<Zp> dst(src.rows(), src.cols());
    for (Index r = 0; r < src.rows(); ++r) {
      for (Index c = 0; c < src.cols(); ++c) {
        try {
          dst(r, c) = reduce_mod(src(r, c), field.modulus);
        } catch (const InputError&) {
          throw InputError("cannot reduce arrow \"" + m.quiver().arrows()[k].id + "\" entry (" + std::to_string(r) +
                           "," + std::to_string(c) + ") = " + src(r, c).str() + " modulo " + std::to_string(p));
        }
      }
    }
    maps.push_back(std::move(dst));
  }
  return FpRep(m.quiver_ptr(), field, m.dims(), std::move(maps));
}

}  // namespace qgr
