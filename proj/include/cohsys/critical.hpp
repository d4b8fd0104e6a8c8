#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohsys/coherent.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

/// A maximal-subsystem class (L_max, W_max) = (O(r - s), W) with dim W = w.
struct Witness {
  int s = 0;
  int w = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// A wall alpha = a m + b together with every witness class realizing it.
struct CriticalValue {
  Rational a;
  Rational b;
  std::vector<Witness> witnesses;

  AlphaLinear alpha() const { return {a, b}; }
};

/// Largest h^0(O(d) (x) I_Z) over reduced Z of length ell: generic points when
/// ell <= d + 1 (then the collinear count coincides), otherwise points on a line.
std::int64_t h0_max_ideal(int d, int ell);

/// Whether a system of type cs can have maximal subsystem (O(r - s), W) with
/// dim W = w, as far as numerical and section-count constraints decide it.
bool witness_achievable(const CsType& cs, int s, int w);

/// Brute-force enumeration of all (a, b) at which a semistable system attains
/// Hilbert-polynomial equality with its maximal subsystem, dim W_max != k/2.
/// Sorted by (a, b); coincident walls are merged.
std::vector<CriticalValue> equality_locus(const CsType& cs);

/// c2 range selecting which closed-form description applies (k = 2).
enum class Regime {
  EvenStableRange,     ///< t = 0, c2 >= r^2 + 2
  EvenEdgeRange,       ///< t = 0, r^2 <= c2 < r^2 + 2
  EvenUnstableWindow,  ///< t = 0, r^2 - s0^2 <= c2 < r^2 - (s0 + 1)^2
  OddStableRange,      ///< t = 1, c2 >= r^2 + 1
  OddMiddleRange,      ///< t = 1, r^2 - r <= c2 < r^2 + 1
  OddUnstableWindow,   ///< t = 1, r^2 - s0^2 - r + s0 <= c2 < r^2 - (s0 + 1)^2 + s0 - r + 1
};

std::string to_string(Regime r);

struct ClosedForm {
  Regime regime;
  std::optional<int> s0;  ///< window index for the unstable windows
  std::vector<CriticalValue> values;
};

/// Closed-form critical values for type (2, 2r - t, c2, 2), r >= 1.
/// Throws RangeError if c2 lies below every described window.
ClosedForm critical_values_closed_form(int r, int t, int c2);

enum class DiscrepancyKind {
  OddStableFeasibility,    ///< odd stable range, w = 2 family emitted without Segre feasibility
  OddUnstableWindowRange,  ///< odd unstable window, strict bound a < r - 5/2 drops the s = 3 - r wall
  LowEndCollinear,       ///< w = 0 wall at s = 1 - r + t with l(Z) <= 1, i.e. c2 in {2r - t - 1, 2r - t}
  OddLowerEnd,             ///< odd stable range, w = 0 wall at s = 2 - r has only one quotient section
  OddMiddleStableFamily,   ///< odd middle range, w = 2 walls of stable bundles not described
  Unclassified,
};

std::string to_string(DiscrepancyKind k);

/// Kinds pre-registered as known ambiguities of the closed forms; they are logged
/// and do not count as failures.
bool is_flagged(DiscrepancyKind k);

enum class Side { ClosedOnly, OracleOnly };

std::string to_string(Side s);

struct Discrepancy {
  Rational a;
  Rational b;
  Side side;
  std::vector<Witness> witnesses;
  DiscrepancyKind kind;
  bool flagged;
};

/// Log entry for c2 on the right endpoint of an unstable window: the window
/// read with "<=" yields `inclusive_reading`, the strict reading `strict_reading`.
struct BoundaryNote {
  int s0;
  std::vector<CriticalValue> strict_reading;
  std::vector<CriticalValue> inclusive_reading;
};

struct Comparison {
  int r = 0;
  int t = 0;
  int c2 = 0;
  std::optional<ClosedForm> closed;  ///< empty when c2 lies in no window
  std::vector<CriticalValue> oracle;
  std::vector<Discrepancy> discrepancies;
  std::vector<BoundaryNote> boundary_notes;

  bool has_unflagged() const;
};

/// Closed form against the oracle at (r, t, c2), k = 2.
Comparison compare_closed_form(int r, int t, int c2);

struct CriticalQuery {
  bool critical = false;
  std::vector<Witness> witnesses;
};

CriticalQuery is_critical(const CsType& cs, const AlphaLinear& alpha);

struct RegularWindow {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// Nearest critical b values on either side of alpha.b along the line of slope a.
/// Throws CriticalInputError when alpha is itself critical.
RegularWindow regular_window(const CsType& cs, const AlphaLinear& alpha);

struct Chambers {
  std::vector<CriticalValue> walls;
  std::vector<AlphaLinear> representatives;
};

/// Walls in asymptotic order plus one interior parameter per chamber: for each
/// wall slope a, b_min - 1, midpoints and b_max + 1; for each gap between
/// consecutive wall slopes, the midpoint slope with b = 0.
Chambers chambers(const CsType& cs);

}  // namespace cohsys
