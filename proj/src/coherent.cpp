#include "cohsys/coherent.hpp"

#include <string>

#include "cohsys/errors.hpp"
#include "cohsys/p2cohom.hpp"

namespace cohsys {

void require_parity(int t) {
  if (t != 0 && t != 1) throw PreconditionError("t must be 0 or 1, got " + std::to_string(t));
}

CsType CsType::make(int r, int t, int c2, int k) {
  require_parity(t);
  if (k < 0) throw PreconditionError("k must be nonnegative");
  return CsType{r, t, c2, k};
}

QPoly reduced_hilbert_rank2(const CsType& cs, const QPoly& alpha) {
  const Rational c1(cs.c1());
  // P_E / 2 with P_E = m^2 + (c1 + 3) m + (c1^2 + 3 c1)/2 - c2 + 2
  const QPoly half_pe({((c1 * c1 + 3 * c1) / 2 - cs.c2) / 2 + 1, (c1 + 3) / 2, Rational(1, 2)});
  return Rational(cs.k, 2) * alpha + half_pe;
}

QPoly reduced_hilbert_sub(const SubsystemData& sub, const QPoly& alpha) {
  return Rational(sub.w) * alpha + hilbert_poly_line(sub.c1L);
}

Rational slope_gap_a(const CsType& cs, const SubsystemData& sub, const Rational& a) {
  return cs.slope() - sub.c1L + a * (Rational(cs.k, 2) - sub.w);
}

}  // namespace cohsys
