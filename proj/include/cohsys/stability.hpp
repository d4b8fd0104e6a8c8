#pragma once

#include <string>

#include "cohsys/coherent.hpp"
#include "cohsys/qpoly.hpp"

namespace cohsys {

// Each compare_* returns the order of p^alpha_(L,W) against p^alpha_(E,V):
// Less means the subsystem does not destabilize.

/// Constant parameter alpha = a >= 0.
Ordering compare_sub_constant(const CsType& cs, const Rational& a, const SubsystemData& sub);

/// Parameter of degree >= 2. When w = k/2 and the slopes tie the answer is
/// Equal: constant coefficients are treated as non-binding in this regime.
Ordering compare_sub_highdeg(const CsType& cs, const SubsystemData& sub);

/// Linear parameter alpha = a m + b with a > 0.
Ordering compare_sub_linear(const CsType& cs, const AlphaLinear& alpha, const SubsystemData& sub);

enum class Classification { AlphaUnstable, AlphaStable, StrictlySemistable };

std::string to_string(Classification c);

/// Stability verdict read off the maximal subsystem (O(r - s), W_max).
Classification classify_with_maximal(const CsType& cs, const AlphaLinear& alpha,
                                     const SubsystemData& maxsub, int s);

/// The only alpha-semistable datum with c1 in {0, -1} and k >= 2 is O + O with
/// its full two-dimensional section space.
bool trivial_semistable(const CsType& cs);

}  // namespace cohsys
