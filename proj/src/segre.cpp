#include "cohsys/segre.hpp"

#include "cohsys/errors.hpp"

namespace cohsys {

bool segre_feasible(int r, int t, int c2, int s) {
  require_parity(t);
  if (s >= 1) return c2 >= s * s + s + r * r - t * (r + s);
  return c2 >= r * r - s * s - t * (r - s);
}

int cycle_length(int r, int t, int c2, int s) {
  require_parity(t);
  const int len = c2 + s * s - r * r + t * (r - s);
  if (len < 0) {
    throw FeasibilityError("negative cycle length " + std::to_string(len) + " for (r=" +
                           std::to_string(r) + ", t=" + std::to_string(t) + ", c2=" +
                           std::to_string(c2) + ", s=" + std::to_string(s) + ")");
  }
  return len;
}

std::vector<int> feasible_segre_values(int r, int t, int c2) {
  require_parity(t);
  if (r < 0) throw PreconditionError("r must be nonnegative");
  std::vector<int> out;
  for (int s = -r + 1; s <= r; ++s) {
    if (segre_feasible(r, t, c2, s)) out.push_back(s);
  }
  // the trivial bundle: the half-open range is empty but S(O + O) = 0
  if (r == 0 && t == 0 && c2 >= 0) out.push_back(0);
  return out;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::NegativeR: return "NegativeR";
    case Violation::SOutOfRange: return "SOutOfRange";
    case Violation::NegativeC2: return "NegativeC2";
  }
  return "?";
}

std::vector<Violation> necessary_conditions(const CsType& cs, int s) {
  if (cs.k < 2) throw PreconditionError("the semistability screen needs k >= 2");
  std::vector<Violation> out;
  if (cs.r < 0) out.push_back(Violation::NegativeR);
  // with r < 0 the range for s is empty; only the r clause is reported
  if (cs.r >= 0 && !(-cs.r < s && s <= cs.r)) out.push_back(Violation::SOutOfRange);
  if (cs.c2 < 0) out.push_back(Violation::NegativeC2);
  return out;
}

}  // namespace cohsys
