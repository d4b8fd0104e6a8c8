#include "cohsys/p2cohom.hpp"

namespace cohsys {

std::int64_t h0_line(std::int64_t d) {
  if (d < 0) return 0;
  return (d + 1) * (d + 2) / 2;
}

QPoly hilbert_poly_line(std::int64_t d) {
  const Rational dd(static_cast<long>(d));
  return QPoly({(dd * dd + 3 * dd) / 2 + 1, dd + Rational(3, 2), Rational(1, 2)});
}

}  // namespace cohsys
