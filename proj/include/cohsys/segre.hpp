#pragma once

#include <string>
#include <vector>

#include "cohsys/coherent.hpp"

namespace cohsys {

/// Whether a rank-2 bundle of type (2r - t, c2) can have Segre invariant 2s - t.
///
/// s >= 1: c2 >= s^2 + s + r^2 - t(r + s).  s <= 0: c2 >= r^2 - s^2 - t(r - s).
bool segre_feasible(int r, int t, int c2, int s);

/// Length of the zero cycle Z in 0 -> O(r-s) -> E -> O(r+s-t) (x) I_Z -> 0,
/// i.e. c2 - (r - s)(r + s - t). Throws FeasibilityError when negative.
int cycle_length(int r, int t, int c2, int s);

/// All feasible s in the half-open range (-r, r], ascending.
std::vector<int> feasible_segre_values(int r, int t, int c2);

enum class Violation { NegativeR, SOutOfRange, NegativeC2 };

std::string to_string(Violation v);

/// Clauses of the numerical alpha-semistability screen (k >= 2) that fail.
/// An empty result means the data passes.
std::vector<Violation> necessary_conditions(const CsType& cs, int s);

}  // namespace cohsys
