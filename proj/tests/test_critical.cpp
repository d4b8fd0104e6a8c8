#include <doctest.h>

#include <set>
#include <utility>

#include "cohsys/coherent.hpp"
#include "cohsys/critical.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/segre.hpp"
#include "cohsys/stability.hpp"

using namespace cohsys;

namespace {

using Pair = std::pair<Rational, Rational>;

std::set<Pair> pairs(const std::vector<CriticalValue>& v) {
  std::set<Pair> out;
  for (const auto& cv : v) out.emplace(cv.a, cv.b);
  return out;
}

}  // namespace

TEST_CASE("equality_locus examples") {
  const auto l = equality_locus(CsType::make(3, 0, 12, 2));
  REQUIRE(l.size() == 2);
  CHECK(l[0].a == Rational(1));
  CHECK(l[0].b == Rational(5, 2));
  CHECK(l[0].witnesses == std::vector<Witness>{{1, 2}});
  CHECK(l[1].b == Rational(13, 2));
  CHECK(l[1].witnesses == std::vector<Witness>{{-1, 0}});

  CHECK(equality_locus(CsType::make(0, 0, 0, 2)).empty());

  const auto l4 = equality_locus(CsType::make(4, 0, 16, 2));
  CHECK(pairs(l4) == std::set<Pair>{{1, 6}, {2, 13}});
  CHECK(l4[0].witnesses == std::vector<Witness>{{-1, 0}});
  CHECK(l4[1].witnesses == std::vector<Witness>{{-2, 0}});
}

TEST_CASE("h0_max_ideal") {
  CHECK(h0_max_ideal(-1, 0) == 0);
  CHECK(h0_max_ideal(1, 0) == 3);
  CHECK(h0_max_ideal(1, 2) == 1);
  CHECK(h0_max_ideal(1, 5) == 1);
  CHECK(h0_max_ideal(2, 3) == 3);
  CHECK(h0_max_ideal(2, 4) == 3);
}

TEST_CASE("the s = 1 - r wall appears only for c2 in {2r - 1, 2r}") {
  for (int r = 3; r <= 6; ++r) {
    const CsType lo = CsType::make(r, 0, 2 * r, 2);
    CHECK(witness_achievable(lo, 1 - r, 0));
    CHECK(witness_achievable(CsType::make(r, 0, 2 * r - 1, 2), 1 - r, 0));
    CHECK_FALSE(witness_achievable(CsType::make(r, 0, 2 * r + 1, 2), 1 - r, 0));
  }
}

TEST_CASE("every oracle witness re-substitutes into both equalities") {
  for (int r = 0; r <= 6; ++r) {
    for (int t = 0; t <= 1; ++t) {
      for (int c2 = 0; c2 <= 50; ++c2) {
        const CsType cs = CsType::make(r, t, c2, 2);
        for (const auto& cv : equality_locus(cs)) {
          CHECK(cv.a > Rational(0));
          REQUIRE_FALSE(cv.witnesses.empty());
          for (const auto& wt : cv.witnesses) {
            const SubsystemData sub{r - wt.s, wt.w};
            CHECK(slope_gap_a(cs, sub, cv.a) == Rational(0));
            CHECK(compare_sub_linear(cs, cv.alpha(), sub) == Ordering::Equal);
          }
        }
      }
    }
  }
}

TEST_CASE("critical_values_closed_form examples") {
  const ClosedForm even = critical_values_closed_form(3, 0, 12);
  CHECK(even.regime == Regime::EvenStableRange);
  CHECK(pairs(even.values) == std::set<Pair>{{1, Rational(5, 2)}, {1, Rational(13, 2)}});

  const ClosedForm edge = critical_values_closed_form(4, 0, 16);
  CHECK(edge.regime == Regime::EvenEdgeRange);
  CHECK(pairs(edge.values) == std::set<Pair>{{1, 6}, {2, 13}});

  const ClosedForm odd = critical_values_closed_form(3, 1, 11);
  CHECK(odd.regime == Regime::OddStableRange);
  CHECK(pairs(odd.values).count({Rational(1, 2), Rational(-1, 2)}) == 1);

  CHECK_THROWS_AS(critical_values_closed_form(4, 0, 3), RangeError);
  CHECK_THROWS_AS(critical_values_closed_form(0, 0, 3), PreconditionError);
}

TEST_CASE("closed form windows tile the range above the lowest window") {
  for (int r = 3; r <= 8; ++r) {
    for (int c2 = 4 * r - 4; c2 <= 80; ++c2) CHECK_NOTHROW(critical_values_closed_form(r, 0, c2));
    for (int c2 = 0; c2 < 4 * r - 4; ++c2) {
      CHECK_THROWS_AS(critical_values_closed_form(r, 0, c2), RangeError);
    }
  }
}

TEST_CASE("unstable window right endpoints are strict and logged") {
  // r = 4, s0 = -2: window [12, 15); c2 = 15 belongs to s0 = -1
  const ClosedForm cf = critical_values_closed_form(4, 0, 15);
  REQUIRE(cf.s0.has_value());
  CHECK(*cf.s0 == -1);
  const Comparison cmp = compare_closed_form(4, 0, 15);
  REQUIRE(cmp.boundary_notes.size() == 1);
  CHECK(cmp.boundary_notes[0].s0 == -2);
  CHECK(pairs(cmp.boundary_notes[0].strict_reading) == pairs(cf.values));
}

TEST_CASE("closed form against the oracle: known discrepancy classes") {
  const Comparison edge = compare_closed_form(2, 0, 4);
  REQUIRE(edge.discrepancies.size() == 1);
  CHECK(edge.discrepancies[0].kind == DiscrepancyKind::LowEndCollinear);
  CHECK(edge.discrepancies[0].side == Side::OracleOnly);
  CHECK(edge.has_unflagged());

  const Comparison feas = compare_closed_form(4, 1, 17);
  bool saw_flagged = false;
  for (const auto& d : feas.discrepancies) {
    if (d.kind == DiscrepancyKind::OddStableFeasibility) {
      saw_flagged = true;
      CHECK(d.flagged);
      CHECK(d.side == Side::ClosedOnly);
    }
  }
  CHECK(saw_flagged);

  CHECK_FALSE(compare_closed_form(3, 0, 12).has_unflagged());
  CHECK(compare_closed_form(3, 0, 12).discrepancies.empty());
}

TEST_CASE("is_critical and regular_window examples") {
  const CsType cs = CsType::make(3, 0, 12, 2);
  const CriticalQuery q = is_critical(cs, {1, Rational(5, 2)});
  CHECK(q.critical);
  CHECK(q.witnesses == std::vector<Witness>{{1, 2}});
  CHECK_FALSE(is_critical(cs, {1, 3}).critical);
  CHECK_FALSE(is_critical(cs, {2, 0}).critical);
  CHECK_FALSE(is_critical(cs, {2, 100}).critical);

  const RegularWindow w = regular_window(cs, {1, 4});
  CHECK(w.lower == Rational(5, 2));
  CHECK(w.upper == Rational(13, 2));
  const RegularWindow top = regular_window(cs, {1, 7});
  CHECK(top.lower == Rational(13, 2));
  CHECK_FALSE(top.upper.has_value());
  const RegularWindow none = regular_window(cs, {3, 0});
  CHECK_FALSE(none.lower.has_value());
  CHECK_FALSE(none.upper.has_value());
  CHECK_THROWS_AS(regular_window(cs, {1, Rational(13, 2)}), CriticalInputError);
}

TEST_CASE("is_critical is constant across a regular window") {
  const CsType cs = CsType::make(3, 0, 12, 2);
  for (int i = 0; i < 40; ++i) {
    const Rational b = Rational(5, 2) + Rational(i + 1, 11);
    CHECK_FALSE(is_critical(cs, {1, b}).critical);
    const RegularWindow w = regular_window(cs, {1, b});
    CHECK(w.lower == Rational(5, 2));
    CHECK(w.upper == Rational(13, 2));
  }
}

TEST_CASE("chambers examples") {
  const Chambers c3 = chambers(CsType::make(3, 0, 12, 2));
  CHECK(c3.walls.size() == 2);
  CHECK(c3.representatives.size() == 3);
  for (const auto& rep : c3.representatives) CHECK(rep.a == Rational(1));

  CHECK(chambers(CsType::make(1, 0, 3, 2)).walls.empty());
  CHECK(chambers(CsType::make(1, 0, 3, 2)).representatives.empty());

  const Chambers c4 = chambers(CsType::make(4, 0, 16, 2));
  REQUIRE(c4.walls.size() == 2);
  CHECK(c4.walls[0].a == Rational(1));
  CHECK(c4.walls[1].a == Rational(2));
  // two rays per slope plus one slope between them
  CHECK(c4.representatives.size() == 5);
  for (const auto& rep : c4.representatives) CHECK_FALSE(is_critical(CsType::make(4, 0, 16, 2), rep).critical);
}
