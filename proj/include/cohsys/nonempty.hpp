#pragma once

#include <optional>

#include "cohsys/rational.hpp"

namespace cohsys {

/// Which sufficient condition fired for type (2, 2r - t, c2, 2) at slope a.
struct SufficientVerdict {
  int clause = 0;         ///< 1..4
  std::optional<int> s0;  ///< the Segre index found by clause 3
};

/// First satisfied sufficient condition for non-emptiness of the alpha-stable
/// moduli, alpha = a m + b. An empty result is not a proof of emptiness.
///   1. c2 >= r^2 - t + 2
///   2. r^2 - rt <= c2 < r^2 - t + 2, r >= 2 + t, a > t/2
///   3. some s0 in [t + 2 - r, -1] with a > t/2 - s0 and c2 >= r^2 - s0^2 + (s0 - r) t
///   4. c2 in {2r - t, 2r - t - 1} and a > r - 1 - t/2
std::optional<SufficientVerdict> nonempty_sufficient(int r, int t, int c2, const Rational& a);

/// Whether (r, t, c2, s0) lies in the window where non-emptiness is decided exactly:
/// t + 2 - r <= s0 < 0 and r^2 - s0^2 + (s0 - r) t <= c2 < r^2 - (s0 + 1)^2 + (s0 - r + 1) t.
bool in_exact_window(int r, int t, int c2, int s0);

/// Threshold on b at a = -s0 + t/2:
/// c2/2 - r^2/2 + rt - r s0 + s0^2/2 - t^2/4 - 3 s0/2 + 3t/4.
Rational nonempty_b_threshold(int r, int t, int c2, int s0);

/// Exact non-emptiness inside the window. semistable = true relaxes the b
/// inequality to b >= B; a > -s0 + t/2 stays strict. Throws PreconditionError outside the window.
bool nonempty_iff(int r, int t, int c2, int s0, const Rational& a, const Rational& b,
                  bool semistable);

/// Complete answer for c1 in {0, -1}: only (t, r, c2, k) = (0, 0, 0, 2) is nonempty.
bool trivial_only(int r, int t, int c2, int k);

}  // namespace cohsys
