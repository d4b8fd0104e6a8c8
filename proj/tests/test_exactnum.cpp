#include <doctest.h>

#include <random>
#include <vector>

#include "cohsys/errors.hpp"
#include "cohsys/qpoly.hpp"
#include "cohsys/rational.hpp"

using namespace cohsys;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

QPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, 3);
  std::vector<Rational> c;
  for (int i = 0, n = deg(rng); i <= n; ++i) c.push_back(random_rational(rng));
  return QPoly(c);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("abc"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse(""), PreconditionError);
  CHECK_THROWS_AS(Rational(1, 2).to_int(), PreconditionError);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(floor(Rational(7, 2)) == 3);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Rational(0) == x);
    CHECK(x * Rational(1) == x);
    CHECK(x + (-x) == Rational(0));
    if (!x.is_zero()) CHECK(x * (Rational(1) / x) == Rational(1));
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("poly_compare examples") {
  const QPoly half_sq = QPoly::monomial(2, Rational(1, 2));
  CHECK(poly_compare(half_sq + QPoly::linear(3, 0), half_sq + QPoly::linear(3, 0)) ==
        Ordering::Equal);
  CHECK(poly_compare(QPoly::monomial(2), QPoly::linear(2, 100)) == Ordering::Greater);
  CHECK(poly_compare(QPoly::linear(1, 1), QPoly::linear(1, 2)) == Ordering::Less);
  CHECK(poly_compare(QPoly(), QPoly::constant(Rational(-1, 3))) == Ordering::Greater);
}

TEST_CASE("poly_eval examples") {
  const QPoly p = QPoly::monomial(2, Rational(1, 2)) + QPoly::linear(3, 0);
  CHECK(poly_eval(p, 2) == Rational(8));
  CHECK(poly_eval(QPoly(), 7) == Rational(0));
  CHECK(poly_eval(QPoly::linear(1, Rational(-1, 2)), Rational(1, 2)) == Rational(0));
}

TEST_CASE("poly_compare is a total order agreeing with evaluation at large m") {
  std::mt19937_64 rng(11);
  const auto sign_of = [](Ordering o) { return o == Ordering::Less ? -1 : (o == Ordering::Greater); };
  for (int i = 0; i < 400; ++i) {
    const QPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    const Ordering pq = poly_compare(p, q);
    CHECK(poly_compare(q, p) == reverse(pq));
    CHECK((pq == Ordering::Equal) == (p == q));
    if (pq != Ordering::Greater && poly_compare(q, r) != Ordering::Greater) {
      CHECK(poly_compare(p, r) != Ordering::Greater);
    }
    // coefficients are bounded by 40 and denominators by 12, so m = 10^6 is past every root
    const Rational diff = poly_eval(p - q, Rational(1000000));
    CHECK(diff.sign() == sign_of(pq));
    CHECK(is_positive(p - q) == (pq == Ordering::Greater));
  }
}

TEST_CASE("polynomial ring operations") {
  const QPoly p = QPoly::linear(1, 1);
  const QPoly q = QPoly::linear(1, -1);
  CHECK(p * q == QPoly({Rational(-1), Rational(0), Rational(1)}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(QPoly::monomial(3, 0).is_zero());
  CHECK((Rational(2) * p).coeff(0) == Rational(2));
  CHECK(p.coeff(5) == Rational(0));
}
