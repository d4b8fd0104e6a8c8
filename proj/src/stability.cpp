#include "cohsys/stability.hpp"

#include <algorithm>

#include "cohsys/errors.hpp"
#include "cohsys/p2cohom.hpp"
#include "cohsys/segre.hpp"

namespace cohsys {
namespace {

Ordering from_sign(int sign) {
  if (sign > 0) return Ordering::Less;
  if (sign < 0) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace

Ordering compare_sub_constant(const CsType& cs, const Rational& a, const SubsystemData& sub) {
  if (a.sign() < 0) throw PreconditionError("constant alpha must be nonnegative");
  const Rational gap = cs.slope() - sub.c1L;
  if (!gap.is_zero()) return from_sign(gap.sign());
  // 4a(k - 2w) against the discriminant 4c2 - c1^2
  const Rational lhs = 4 * a * (cs.k - 2 * sub.w);
  const Rational disc = 4 * cs.c2 - cs.c1() * cs.c1();
  return from_sign((lhs - disc).sign());
}

Ordering compare_sub_highdeg(const CsType& cs, const SubsystemData& sub) {
  const int twice = 2 * sub.w;
  if (twice < cs.k) return Ordering::Less;
  if (twice > cs.k) return Ordering::Greater;
  return from_sign((cs.slope() - sub.c1L).sign());
}

Ordering compare_sub_linear(const CsType& cs, const AlphaLinear& alpha, const SubsystemData& sub) {
  if (alpha.a.sign() <= 0) throw PreconditionError("linear alpha needs a > 0");
  const Rational gap = slope_gap_a(cs, sub, alpha.a);
  if (!gap.is_zero()) return from_sign(gap.sign());
  const int c1 = cs.c1();
  const Rational lhs(c1 * c1 - 2 * cs.c2 - 2 * sub.c1L * sub.c1L);
  const Rational rhs = (4 * alpha.b - 6 * alpha.a) * (Rational(sub.w) - Rational(cs.k, 2));
  return from_sign((lhs - rhs).sign());
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::AlphaUnstable: return "AlphaUnstable";
    case Classification::AlphaStable: return "AlphaStable";
    case Classification::StrictlySemistable: return "StrictlySemistable";
  }
  return "?";
}

Classification classify_with_maximal(const CsType& cs, const AlphaLinear& alpha,
                                     const SubsystemData& maxsub, int s) {
  if (maxsub.c1L != cs.r - s) {
    throw PreconditionError("maximal subsystem degree must equal r - s");
  }
  const auto cap = std::min<std::int64_t>(cs.k, h0_line(cs.r - s));
  if (maxsub.w < 0 || maxsub.w > cap) {
    throw PreconditionError("dim W_max exceeds min(k, h0(O(r - s)))");
  }
  if (!segre_feasible(cs.r, cs.t, cs.c2, s)) {
    throw FeasibilityError("Segre invariant not feasible for this type");
  }
  switch (compare_sub_linear(cs, alpha, maxsub)) {
    case Ordering::Less: return Classification::AlphaStable;
    case Ordering::Equal: return Classification::StrictlySemistable;
    case Ordering::Greater: return Classification::AlphaUnstable;
  }
  return Classification::AlphaUnstable;
}

bool trivial_semistable(const CsType& cs) {
  const int c1 = cs.c1();
  if (c1 != 0 && c1 != -1) throw PreconditionError("trivial_semistable needs c1 in {0, -1}");
  if (cs.k < 2) throw PreconditionError("trivial_semistable needs k >= 2");
  return cs.t == 0 && cs.r == 0 && cs.c2 == 0 && cs.k == 2;
}

}  // namespace cohsys
