#include "cohsys/nonempty.hpp"

#include "cohsys/coherent.hpp"
#include "cohsys/errors.hpp"

namespace cohsys {

std::optional<SufficientVerdict> nonempty_sufficient(int r, int t, int c2, const Rational& a) {
  require_parity(t);
  if (2 * r - t <= 0) throw PreconditionError("nonempty_sufficient needs c1 = 2r - t > 0");
  if (a.sign() <= 0) throw PreconditionError("nonempty_sufficient needs a > 0");
  const Rational half_t(t, 2);
  if (c2 >= r * r - t + 2) return SufficientVerdict{1, std::nullopt};
  if (r * r - r * t <= c2 && c2 < r * r - t + 2 && r >= 2 + t && a > half_t) {
    return SufficientVerdict{2, std::nullopt};
  }
  for (int s0 = t + 2 - r; s0 <= -1; ++s0) {
    if (a > half_t - s0 && c2 >= r * r - s0 * s0 + (s0 - r) * t) return SufficientVerdict{3, s0};
  }
  if ((c2 == 2 * r - t || c2 == 2 * r - t - 1) && a > Rational(r - 1) - half_t) {
    return SufficientVerdict{4, std::nullopt};
  }
  return std::nullopt;
}

bool in_exact_window(int r, int t, int c2, int s0) {
  require_parity(t);
  return t + 2 - r <= s0 && s0 < 0 && r * r - s0 * s0 + (s0 - r) * t <= c2 &&
         c2 < r * r - (s0 + 1) * (s0 + 1) + (s0 - r + 1) * t;
}

Rational nonempty_b_threshold(int r, int t, int c2, int s0) {
  return Rational(c2, 2) - Rational(r * r, 2) + r * t - r * s0 + Rational(s0 * s0, 2) -
         Rational(t * t, 4) - Rational(3 * s0, 2) + Rational(3 * t, 4);
}

bool nonempty_iff(int r, int t, int c2, int s0, const Rational& a, const Rational& b,
                  bool semistable) {
  if (!in_exact_window(r, t, c2, s0)) {
    throw PreconditionError("(r, t, c2, s0) outside the exact non-emptiness window");
  }
  const Rational edge = Rational(-s0) + Rational(t, 2);
  if (a > edge) return true;
  if (a != edge) return false;
  const Rational bound = nonempty_b_threshold(r, t, c2, s0);
  return semistable ? b >= bound : b > bound;
}

bool trivial_only(int r, int t, int c2, int k) {
  require_parity(t);
  const int c1 = 2 * r - t;
  if (c1 != 0 && c1 != -1) throw PreconditionError("trivial_only needs c1 in {0, -1}");
  if (k < 2) throw PreconditionError("trivial_only needs k >= 2");
  return t == 0 && r == 0 && c2 == 0 && k == 2;
}

}  // namespace cohsys
