#pragma once

#include <utility>

namespace cohsys {

/// Dimensions attached to a wall of the w = 2 family with data (r, s, t, c2), s >= 1.
struct FlipDims {
  int ext1 = 0;         ///< dim Ext^1(O(r+s-t) (x) I_Z, O(r-s))
  int base = 0;         ///< 2 l(Z) + dim Gr(2, H^0(O(r-s)))
  int sigma_minus = 0;  ///< dim of the flip locus on the stable side
};

/// dim Ext^1 = c2 - r^2 - s^2 + 3s - 1 + (t/2)(2r + 2s - 3 - t).
int ext1_dim(int r, int s, int t, int c2);

/// (dim Hom, dim Ext^2) of the same pair; both vanish on the stable side.
std::pair<int, int> hom_ext2_vanish(int r, int s, int t, int c2);

/// 2 l(Z) + 2 (h^0(O(r - s)) - 2).
int flip_base_dim(int r, int s, int t, int c2);

/// 3c2 - 3r^2 + s^2 + 3s + 2 h^0(O(r - s)) - 6 + (t/2)(6r - 2s - 3 - t).
int sigma_minus_dim(int r, int s, int t, int c2);

/// The opposite flip locus is empty for walls of the w = 2 family.
constexpr bool sigma_plus_empty() { return true; }

FlipDims flip_dims(int r, int s, int t, int c2);

}  // namespace cohsys
