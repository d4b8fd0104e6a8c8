#include "cohsys/critical.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cohsys/errors.hpp"
#include "cohsys/p2cohom.hpp"
#include "cohsys/segre.hpp"

namespace cohsys {
namespace {

using WallKey = std::pair<Rational, Rational>;

std::vector<CriticalValue> collect(std::map<WallKey, std::vector<Witness>>&& walls) {
  std::vector<CriticalValue> out;
  out.reserve(walls.size());
  for (auto& [key, wit] : walls) {
    std::sort(wit.begin(), wit.end());
    wit.erase(std::unique(wit.begin(), wit.end()), wit.end());
    out.push_back({key.first, key.second, std::move(wit)});
  }
  return out;
}

// b on the even-c1 families of the negative Segre invariant: w = 0, a = -s.
Rational even_w0_b(int r, int c2, const Rational& a) {
  return Rational(c2, 2) - Rational(r * r, 2) + r * a + a * a / 2 + Rational(3, 2) * a;
}

Rational even_w2_b(int r, int c2, const Rational& a) {
  return (Rational(r * r) - a * a + 2 * r * a + 3 * a - c2) / 2;
}

Rational odd_w2_b(int r, int c2, const Rational& a) {
  return (Rational(r * r) - a * a + 2 * r * a + 2 * a - c2 - r) / 2 + Rational(1, 8);
}

Rational odd_w0_b(int r, int c2, const Rational& a) {
  return (a * a - r * r + 2 * r * a + 2 * a + c2 + r) / 2 - Rational(1, 8);
}

void add(std::map<WallKey, std::vector<Witness>>& walls, const Rational& a, const Rational& b,
         Witness w) {
  walls[{a, b}].push_back(w);
}

std::vector<CriticalValue> even_window_values(int r, int c2, int s0) {
  std::map<WallKey, std::vector<Witness>> walls;
  for (int a = -s0; a <= r - 2; ++a) add(walls, Rational(a), even_w0_b(r, c2, a), {-a, 0});
  return collect(std::move(walls));
}

bool same_walls(const std::vector<CriticalValue>& x, const std::vector<CriticalValue>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].a != y[i].a || x[i].b != y[i].b) return false;
  }
  return true;
}

}  // namespace

std::int64_t h0_max_ideal(int d, int ell) {
  if (d < 0) return 0;
  if (ell <= d + 1) return h0_line(d) - ell;
  return h0_line(d - 1);
}

bool witness_achievable(const CsType& cs, int s, int w) {
  if (!segre_feasible(cs.r, cs.t, cs.c2, s)) return false;
  if (s <= -cs.r || s > cs.r) return false;
  if (w < 0 || w > cs.k || 2 * w == cs.k) return false;
  if (w > h0_line(cs.r - s)) return false;
  // V / W_max injects into the sections of the quotient O(r + s - t) (x) I_Z.
  const int ell = cycle_length(cs.r, cs.t, cs.c2, s);
  return h0_max_ideal(cs.r + s - cs.t, ell) >= cs.k - w;
}

std::vector<CriticalValue> equality_locus(const CsType& cs) {
  if (cs.r < 0) throw PreconditionError("equality_locus needs r >= 0");
  const int c1 = cs.c1();
  const Rational half_k(cs.k, 2);
  std::map<WallKey, std::vector<Witness>> walls;
  for (int s : feasible_segre_values(cs.r, cs.t, cs.c2)) {
    for (int w = 0; w <= cs.k; ++w) {
      if (!witness_achievable(cs, s, w)) continue;
      const Rational excess = Rational(w) - half_k;
      // slope gap (s - t/2) + a (k/2 - w) vanishes
      const Rational a = (Rational(s) - Rational(cs.t, 2)) / excess;
      if (a.sign() <= 0) continue;
      const int lmax = cs.r - s;
      const Rational lhs(c1 * c1 - 2 * cs.c2 - 2 * lmax * lmax);
      const Rational b = (lhs / excess + 6 * a) / 4;
      add(walls, a, b, {s, w});
    }
  }
  return collect(std::move(walls));
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::EvenStableRange: return "even-stable-range";
    case Regime::EvenEdgeRange: return "even-edge-range";
    case Regime::EvenUnstableWindow: return "even-unstable-window";
    case Regime::OddStableRange: return "odd-stable-range";
    case Regime::OddMiddleRange: return "odd-middle-range";
    case Regime::OddUnstableWindow: return "odd-unstable-window";
  }
  return "?";
}

ClosedForm critical_values_closed_form(int r, int t, int c2) {
  require_parity(t);
  if (r < 1) throw PreconditionError("closed forms need r >= 1");
  const int r2 = r * r;
  std::map<WallKey, std::vector<Witness>> walls;
  if (t == 0) {
    if (c2 >= r2 + 2) {
      for (int s = 1; s < r; ++s) {
        if (c2 >= r2 + s * s + s) add(walls, Rational(s), even_w2_b(r, c2, s), {s, 2});
      }
      for (int s = -r + 2; s < 0; ++s) add(walls, Rational(-s), even_w0_b(r, c2, -s), {s, 0});
      return {Regime::EvenStableRange, std::nullopt, collect(std::move(walls))};
    }
    if (c2 >= r2) {
      for (int s = -r + 2; s < 0; ++s) add(walls, Rational(-s), even_w0_b(r, c2, -s), {s, 0});
      return {Regime::EvenEdgeRange, std::nullopt, collect(std::move(walls))};
    }
    for (int s0 = -r + 2; s0 < 0; ++s0) {
      if (r2 - s0 * s0 <= c2 && c2 < r2 - (s0 + 1) * (s0 + 1)) {
        return {Regime::EvenUnstableWindow, s0, even_window_values(r, c2, s0)};
      }
    }
    throw RangeError("c2 = " + std::to_string(c2) + " lies below every even-c1 window for r = " +
                     std::to_string(r));
  }

  if (c2 >= r2 + 1) {
    for (int s = 1; s < r; ++s) {
      const Rational a = Rational(s) - Rational(1, 2);
      add(walls, a, odd_w2_b(r, c2, a), {s, 2});
    }
    for (int s = -r + 2; s <= 0; ++s) {
      const Rational a = Rational(1, 2) - s;
      add(walls, a, odd_w0_b(r, c2, a), {s, 0});
    }
    return {Regime::OddStableRange, std::nullopt, collect(std::move(walls))};
  }
  if (c2 >= r2 - r) {
    for (int s = -r + 3; s <= 0; ++s) {
      const Rational a = Rational(1, 2) - s;
      add(walls, a, odd_w0_b(r, c2, a), {s, 0});
    }
    return {Regime::OddMiddleRange, std::nullopt, collect(std::move(walls))};
  }
  if (r >= 3) {
    for (int s0 = -r + 3; s0 < 0; ++s0) {
      const int lo = r2 - s0 * s0 - r + s0;
      const int hi = r2 - (s0 + 1) * (s0 + 1) + s0 - r + 1;
      if (lo <= c2 && c2 < hi) {
        for (Rational a = Rational(-s0) + Rational(1, 2); a < Rational(r) - Rational(5, 2);
             a += 1) {
          const Rational s = Rational(1, 2) - a;
          add(walls, a, odd_w0_b(r, c2, a), {static_cast<int>(s.to_int()), 0});
        }
        return {Regime::OddUnstableWindow, s0, collect(std::move(walls))};
      }
    }
  }
  throw RangeError("c2 = " + std::to_string(c2) + " lies below every odd-c1 window for r = " +
                   std::to_string(r));
}

std::string to_string(DiscrepancyKind k) {
  switch (k) {
    case DiscrepancyKind::OddStableFeasibility: return "odd-stable-feasibility";
    case DiscrepancyKind::OddUnstableWindowRange: return "odd-unstable-window-range";
    case DiscrepancyKind::LowEndCollinear: return "low-end-collinear";
    case DiscrepancyKind::OddLowerEnd: return "odd-lower-end";
    case DiscrepancyKind::OddMiddleStableFamily: return "odd-middle-stable-family";
    case DiscrepancyKind::Unclassified: return "unclassified";
  }
  return "?";
}

bool is_flagged(DiscrepancyKind k) {
  return k == DiscrepancyKind::OddStableFeasibility ||
         k == DiscrepancyKind::OddUnstableWindowRange;
}

std::string to_string(Side s) { return s == Side::ClosedOnly ? "closed_only" : "oracle_only"; }

bool Comparison::has_unflagged() const {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& d) { return !d.flagged; });
}

namespace {

DiscrepancyKind classify(int r, int t, int c2, Regime regime, Side side,
                         const std::vector<Witness>& witnesses) {
  auto all = [&](auto pred) { return std::all_of(witnesses.begin(), witnesses.end(), pred); };
  if (side == Side::ClosedOnly) {
    if (regime == Regime::OddStableRange &&
        all([&](const Witness& w) { return w.w == 2 && !segre_feasible(r, t, c2, w.s); })) {
      return DiscrepancyKind::OddStableFeasibility;
    }
    if (regime == Regime::OddStableRange &&
        all([&](const Witness& w) { return w.w == 0 && w.s == 2 - r; })) {
      return DiscrepancyKind::OddLowerEnd;
    }
    return DiscrepancyKind::Unclassified;
  }
  if (all([&](const Witness& w) {
        return w.w == 0 && w.s == 1 - r + t && cycle_length(r, t, c2, w.s) <= 1;
      })) {
    return DiscrepancyKind::LowEndCollinear;
  }
  if (regime == Regime::OddUnstableWindow &&
      all([&](const Witness& w) { return w.w == 0 && w.s == 3 - r; })) {
    return DiscrepancyKind::OddUnstableWindowRange;
  }
  if (regime == Regime::OddMiddleRange && all([](const Witness& w) { return w.w == 2; })) {
    return DiscrepancyKind::OddMiddleStableFamily;
  }
  return DiscrepancyKind::Unclassified;
}

}  // namespace

Comparison compare_closed_form(int r, int t, int c2) {
  Comparison cmp;
  cmp.r = r;
  cmp.t = t;
  cmp.c2 = c2;
  cmp.oracle = equality_locus(CsType::make(r, t, c2, 2));
  try {
    cmp.closed = critical_values_closed_form(r, t, c2);
  } catch (const RangeError&) {
    return cmp;
  }

  std::map<WallKey, const CriticalValue*> closed_set;
  std::map<WallKey, const CriticalValue*> oracle_set;
  for (const auto& cv : cmp.closed->values) closed_set[{cv.a, cv.b}] = &cv;
  for (const auto& cv : cmp.oracle) oracle_set[{cv.a, cv.b}] = &cv;
  const Regime regime = cmp.closed->regime;
  auto record = [&](const CriticalValue& cv, Side side) {
    const auto kind = classify(r, t, c2, regime, side, cv.witnesses);
    cmp.discrepancies.push_back({cv.a, cv.b, side, cv.witnesses, kind, is_flagged(kind)});
  };
  for (const auto& [key, cv] : closed_set) {
    if (!oracle_set.count(key)) record(*cv, Side::ClosedOnly);
  }
  for (const auto& [key, cv] : oracle_set) {
    if (!closed_set.count(key)) record(*cv, Side::OracleOnly);
  }

  // Right endpoints of the even unstable windows, where the inclusive reading
  // of the window would also apply.
  if (t == 0) {
    for (int s0 = -r + 2; s0 < 0; ++s0) {
      if (c2 != r * r - (s0 + 1) * (s0 + 1)) continue;
      BoundaryNote note{s0, cmp.closed->values, even_window_values(r, c2, s0)};
      if (!same_walls(note.strict_reading, note.inclusive_reading)) {
        cmp.boundary_notes.push_back(std::move(note));
      }
    }
  }
  return cmp;
}

CriticalQuery is_critical(const CsType& cs, const AlphaLinear& alpha) {
  if (!alpha.positive()) throw PreconditionError("alpha must be positive");
  for (const auto& cv : equality_locus(cs)) {
    if (cv.a == alpha.a && cv.b == alpha.b) return {true, cv.witnesses};
  }
  return {false, {}};
}

RegularWindow regular_window(const CsType& cs, const AlphaLinear& alpha) {
  if (!alpha.positive()) throw PreconditionError("alpha must be positive");
  RegularWindow win;
  for (const auto& cv : equality_locus(cs)) {
    if (cv.a != alpha.a) continue;
    if (cv.b == alpha.b) {
      throw CriticalInputError("alpha = " + alpha.a.to_string() + "m + " + alpha.b.to_string() +
                               " is a critical value");
    }
    if (cv.b < alpha.b && (!win.lower || *win.lower < cv.b)) win.lower = cv.b;
    if (cv.b > alpha.b && (!win.upper || cv.b < *win.upper)) win.upper = cv.b;
  }
  return win;
}

Chambers chambers(const CsType& cs) {
  if (cs.r < 1) throw PreconditionError("chambers needs r >= 1");
  Chambers out;
  out.walls = equality_locus(cs);
  std::vector<Rational> slopes;
  for (const auto& cv : out.walls) {
    if (slopes.empty() || slopes.back() != cv.a) slopes.push_back(cv.a);
  }
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const Rational& a = slopes[i];
    std::vector<Rational> bs;
    for (const auto& cv : out.walls) {
      if (cv.a == a) bs.push_back(cv.b);
    }
    out.representatives.push_back({a, bs.front() - 1});
    for (std::size_t j = 0; j + 1 < bs.size(); ++j) {
      out.representatives.push_back({a, (bs[j] + bs[j + 1]) / 2});
    }
    out.representatives.push_back({a, bs.back() + 1});
    if (i + 1 < slopes.size()) out.representatives.push_back({(a + slopes[i + 1]) / 2, Rational(0)});
  }
  return out;
}

}  // namespace cohsys
