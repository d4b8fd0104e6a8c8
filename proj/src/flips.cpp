#include "cohsys/flips.hpp"

#include <string>

#include "cohsys/coherent.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/p2cohom.hpp"
#include "cohsys/segre.hpp"

namespace cohsys {
namespace {

void require_wall(int r, int s, int t, int c2) {
  require_parity(t);
  if (s < 1) throw PreconditionError("flip dimensions need s >= 1, got " + std::to_string(s));
  if (!segre_feasible(r, t, c2, s)) {
    throw FeasibilityError("Segre invariant 2s - t infeasible for (r=" + std::to_string(r) +
                           ", t=" + std::to_string(t) + ", c2=" + std::to_string(c2) +
                           ", s=" + std::to_string(s) + ")");
  }
}

void require_grassmannian(int r, int s) {
  if (h0_line(r - s) < 2) {
    throw EmptyGrassmannianError("Gr(2, H^0(O(" + std::to_string(r - s) + "))) is empty");
  }
}

}  // namespace

int ext1_dim(int r, int s, int t, int c2) {
  require_wall(r, s, t, c2);
  // t (2r + 2s - 3 - t) is even for t in {0, 1}
  const int dim = c2 - r * r - s * s + 3 * s - 1 + t * (2 * r + 2 * s - 3 - t) / 2;
  if (dim < 0) throw NegativeDimensionError("negative Ext^1 dimension " + std::to_string(dim));
  return dim;
}

std::pair<int, int> hom_ext2_vanish(int r, int s, int t, int c2) {
  require_wall(r, s, t, c2);
  return {0, 0};
}

int flip_base_dim(int r, int s, int t, int c2) {
  require_wall(r, s, t, c2);
  require_grassmannian(r, s);
  return 2 * cycle_length(r, t, c2, s) + 2 * static_cast<int>(h0_line(r - s) - 2);
}

int sigma_minus_dim(int r, int s, int t, int c2) {
  require_wall(r, s, t, c2);
  require_grassmannian(r, s);
  const int h = static_cast<int>(h0_line(r - s));
  const int dim = 3 * c2 - 3 * r * r + s * s + 3 * s + 2 * h - 6 + t * (6 * r - 2 * s - 3 - t) / 2;
  if (dim < 0) throw NegativeDimensionError("negative flip-locus dimension " + std::to_string(dim));
  return dim;
}

FlipDims flip_dims(int r, int s, int t, int c2) {
  FlipDims d;
  d.ext1 = ext1_dim(r, s, t, c2);
  d.base = flip_base_dim(r, s, t, c2);
  d.sigma_minus = sigma_minus_dim(r, s, t, c2);
  if (d.sigma_minus != d.base + d.ext1 - 1) {
    throw InvariantError("flip-locus dimension disagrees with base + fibre decomposition");
  }
  return d;
}

}  // namespace cohsys
