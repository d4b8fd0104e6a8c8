#include <doctest.h>

#include <random>

#include "cohsys/coherent.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/stability.hpp"

using namespace cohsys;

TEST_CASE("compare_sub_constant examples") {
  CHECK(compare_sub_constant(CsType::make(1, 0, 1, 2), 1, {0, 1}) == Ordering::Less);
  CHECK(compare_sub_constant(CsType::make(1, 0, 1, 2), 1, {1, 1}) == Ordering::Equal);
  CHECK(compare_sub_constant(CsType::make(1, 0, 0, 2), 1, {1, 2}) == Ordering::Greater);
}

TEST_CASE("compare_sub_highdeg examples") {
  CHECK(compare_sub_highdeg(CsType::make(1, 0, 3, 2), {5, 0}) == Ordering::Less);
  CHECK(compare_sub_highdeg(CsType::make(1, 0, 3, 2), {0, 1}) == Ordering::Less);
  CHECK(compare_sub_highdeg(CsType::make(1, 0, 3, 2), {1, 2}) == Ordering::Greater);
  CHECK(compare_sub_highdeg(CsType::make(1, 0, 3, 2), {1, 1}) == Ordering::Equal);
  CHECK(compare_sub_highdeg(CsType::make(1, 0, 3, 2), {2, 1}) == Ordering::Greater);
}

TEST_CASE("compare_sub_linear examples") {
  const CsType cs = CsType::make(3, 0, 12, 2);
  CHECK(compare_sub_linear(cs, {1, Rational(5, 2)}, {2, 2}) == Ordering::Equal);
  CHECK(compare_sub_linear(cs, {1, 2}, {2, 2}) == Ordering::Less);
  CHECK(compare_sub_linear(CsType::make(2, 0, 0, 2), {1, 1}, {0, 0}) == Ordering::Less);
  CHECK_THROWS_AS(compare_sub_linear(cs, {0, 2}, {2, 2}), PreconditionError);
}

TEST_CASE("compare_sub_linear agrees with the reduced Hilbert polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> small(0, 6), sub_deg(-4, 12), num(1, 30), den(1, 6),
      bnum(-30, 30);
  for (int i = 0; i < 2000; ++i) {
    const CsType cs = CsType::make(small(rng), small(rng) % 2, 3 * small(rng), small(rng));
    const SubsystemData sub{sub_deg(rng), small(rng) % (cs.k + 1)};
    const AlphaLinear alpha{Rational(num(rng), den(rng)), Rational(bnum(rng), den(rng))};
    CHECK(compare_sub_linear(cs, alpha, sub) ==
          poly_compare(reduced_hilbert_sub(sub, alpha.poly()),
                       reduced_hilbert_rank2(cs, alpha.poly())));
  }
}

TEST_CASE("classify_with_maximal examples") {
  CHECK(classify_with_maximal(CsType::make(2, 0, 6, 2), {1, 1}, {1, 1}, 1) ==
        Classification::AlphaStable);
  CHECK(classify_with_maximal(CsType::make(3, 0, 12, 2), {1, Rational(5, 2)}, {2, 2}, 1) ==
        Classification::StrictlySemistable);
  CHECK(classify_with_maximal(CsType::make(2, 0, 3, 2), {Rational(1, 2), 0}, {3, 0}, -1) ==
        Classification::AlphaUnstable);
  CHECK(classify_with_maximal(CsType::make(3, 0, 12, 2), {1, 2}, {2, 2}, 1) ==
        Classification::AlphaStable);
  CHECK(classify_with_maximal(CsType::make(3, 0, 12, 2), {1, 3}, {2, 2}, 1) ==
        Classification::AlphaUnstable);
  // c1(L) must be r - s
  CHECK_THROWS_AS(classify_with_maximal(CsType::make(3, 0, 12, 2), {1, 3}, {1, 2}, 1),
                  PreconditionError);
}

TEST_CASE("trivial_semistable examples") {
  CHECK(trivial_semistable(CsType::make(0, 0, 0, 2)));
  CHECK_FALSE(trivial_semistable(CsType::make(0, 1, 0, 2)));
  CHECK_FALSE(trivial_semistable(CsType::make(0, 0, 1, 2)));
}
