#pragma once

#include <cstdint>

#include "cohsys/qpoly.hpp"

namespace cohsys {

/// Degree of the canonical bundle of the projective plane.
inline constexpr int kCanonicalDegree = -3;

/// h^0(P^2, O(d)): the number of degree-d monomials in three variables.
std::int64_t h0_line(std::int64_t d);

/// Hilbert polynomial of O(d): m^2/2 + (d + 3/2) m + (d^2 + 3d)/2 + 1.
QPoly hilbert_poly_line(std::int64_t d);

}  // namespace cohsys
