#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cohsys/linalg.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

/// Point of P^2 in homogeneous coordinates, scaled so the first nonzero
/// coordinate is 1.
class Point {
 public:
  Point(Rational x, Rational y, Rational z);

  const std::array<Rational, 3>& coords() const { return c_; }
  /// Primitive integer representative of the same projective point.
  std::array<mpz_class, 3> integer_coords() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::array<Rational, 3> c_;
};

/// A reduced zero cycle: finitely many distinct points of P^2.
class PointConfig {
 public:
  PointConfig() = default;
  explicit PointConfig(std::vector<Point> points);

  /// Throws PreconditionError if the point is already present.
  void add(Point p);
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  PointConfig without(std::size_t index) const;

 private:
  std::vector<Point> points_;
};

/// Exponent triples (i, j, k), i + j + k = d, in a fixed order.
std::vector<std::array<int, 3>> monomials(int d);

/// |Z| x h^0(O(d)) matrix of degree-d monomials evaluated at integer
/// representatives of the points.
IntMatrix evaluation_matrix(const PointConfig& z, int d);

/// h^0(O(d) (x) I_Z) = h^0(O(d)) - rank(evaluation matrix); 0 for d < 0.
std::int64_t h0_ideal(const PointConfig& z, int d);

/// True iff no curve of degree d contains Z (vacuously true for d < 0).
bool lies_on_no_curve(const PointConfig& z, int d);

/// Every degree-d form vanishing on Z minus one point vanishes on all of Z.
bool cayley_bacharach(const PointConfig& z, int d);

/// Degree of L^{-1} (x) L0 (x) omega for L = O(r - s), L0 = O(r + s - t): 2s - t - 3.
int extension_twist_degree(int r, int s, int t);

/// l distinct pseudo-random rational points on the line X2 = X0 + 2 X1.
PointConfig gen_collinear(int l, std::uint64_t seed);

/// l pseudo-random points imposing independent conditions on curves of every
/// degree d <= 6. Throws GenerationError after exhausting the retry budget.
PointConfig gen_general(int l, std::uint64_t seed);

struct WitnessConfig {
  PointConfig points;
  int no_curve_degree = 0;  ///< 2s - 1 - t
  int cb_degree = 0;        ///< 2s - 3 - t
  bool no_curve = false;
  bool cayley_bacharach = false;
};

/// A zero cycle certifying an extension 0 -> O(r-s) -> E -> O(r+s-t) (x) I_Z -> 0
/// with locally free E and maximal subbundle O(r - s).
WitnessConfig witness_config(int r, int t, int c2, int s, std::uint64_t seed);

}  // namespace cohsys
