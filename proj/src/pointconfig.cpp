#include "cohsys/pointconfig.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "cohsys/coherent.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/p2cohom.hpp"
#include "cohsys/segre.hpp"

namespace cohsys {
namespace {

constexpr int kMaxAttempts = 64;
constexpr long kNumeratorBound = 50;
constexpr long kDenominatorBound = 20;
constexpr int kGeneralDegreeCheck = 6;

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-kNumeratorBound, kNumeratorBound);
    std::uniform_int_distribution<long> den(1, kDenominatorBound);
    const long n = num(rng_);
    const long d = den(rng_);
    return Rational(n, d);
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  // splitmix64 step, so consecutive seeds give unrelated streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PointConfig random_points(int l, std::uint64_t seed) {
  RationalSampler sample(seed);
  PointConfig z;
  while (static_cast<int>(z.size()) < l) {
    Rational x = sample.next(), y = sample.next(), w = sample.next();
    if (x.is_zero() && y.is_zero() && w.is_zero()) continue;
    Point p(std::move(x), std::move(y), std::move(w));
    const auto& pts = z.points();
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    z.add(std::move(p));
  }
  return z;
}

bool imposes_independent_conditions(const PointConfig& z, int max_degree) {
  const auto l = static_cast<std::int64_t>(z.size());
  for (int d = 0; d <= max_degree; ++d) {
    if (h0_ideal(z, d) != std::max<std::int64_t>(0, h0_line(d) - l)) return false;
  }
  return true;
}

}  // namespace

Point::Point(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} {
  auto lead = std::find_if(c_.begin(), c_.end(), [](const Rational& q) { return !q.is_zero(); });
  if (lead == c_.end()) throw PreconditionError("(0:0:0) is not a point of P^2");
  const Rational scale = *lead;
  for (auto& q : c_) q /= scale;
}

std::array<mpz_class, 3> Point::integer_coords() const {
  mpz_class l = 1;
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.denominator().get_mpz_t());
  std::array<mpz_class, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = c_[i].numerator() * (l / c_[i].denominator());
  return out;
}

PointConfig::PointConfig(std::vector<Point> points) {
  for (auto& p : points) add(std::move(p));
}

void PointConfig::add(Point p) {
  if (std::find(points_.begin(), points_.end(), p) != points_.end()) {
    throw PreconditionError("duplicate point in configuration");
  }
  points_.push_back(std::move(p));
}

PointConfig PointConfig::without(std::size_t index) const {
  PointConfig out;
  out.points_.reserve(points_.size() - 1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != index) out.points_.push_back(points_[i]);
  }
  return out;
}

std::vector<std::array<int, 3>> monomials(int d) {
  std::vector<std::array<int, 3>> out;
  if (d < 0) return out;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  }
  return out;
}

IntMatrix evaluation_matrix(const PointConfig& z, int d) {
  const auto mons = monomials(d);
  IntMatrix m(z.size(), mons.size());
  for (std::size_t row = 0; row < z.size(); ++row) {
    const auto xyz = z[row].integer_coords();
    // powers[v][e] = xyz[v]^e
    std::array<std::vector<mpz_class>, 3> powers;
    for (std::size_t v = 0; v < 3; ++v) {
      powers[v].resize(static_cast<std::size_t>(std::max(d, 0)) + 1);
      powers[v][0] = 1;
      for (int e = 1; e <= d; ++e) powers[v][e] = powers[v][e - 1] * xyz[v];
    }
    for (std::size_t col = 0; col < mons.size(); ++col) {
      const auto& e = mons[col];
      m.at(row, col) = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    }
  }
  return m;
}

std::int64_t h0_ideal(const PointConfig& z, int d) {
  if (d < 0) return 0;
  if (z.empty()) return h0_line(d);
  return h0_line(d) - static_cast<std::int64_t>(rank(evaluation_matrix(z, d)));
}

bool lies_on_no_curve(const PointConfig& z, int d) { return h0_ideal(z, d) == 0; }

bool cayley_bacharach(const PointConfig& z, int d) {
  if (d < 0) return true;
  const std::int64_t full = h0_ideal(z, d);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (h0_ideal(z.without(i), d) != full) return false;
  }
  return true;
}

int extension_twist_degree(int r, int s, int t) {
  return (s - r) + (r + s - t) + kCanonicalDegree;
}

PointConfig gen_collinear(int l, std::uint64_t seed) {
  if (l < 0) throw PreconditionError("negative configuration length");
  RationalSampler sample(seed);
  PointConfig z;
  std::vector<Rational> used;
  while (static_cast<int>(z.size()) < l) {
    Rational u = sample.next();
    if (std::find(used.begin(), used.end(), u) != used.end()) continue;
    used.push_back(u);
    z.add(Point(Rational(1), u, 1 + 2 * u));
  }
  return z;
}

PointConfig gen_general(int l, std::uint64_t seed) {
  if (l < 0) throw PreconditionError("negative configuration length");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PointConfig z = random_points(l, attempt_seed(seed, attempt));
    if (imposes_independent_conditions(z, kGeneralDegreeCheck)) return z;
  }
  throw GenerationError("no general configuration of length " + std::to_string(l) + " after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

WitnessConfig witness_config(int r, int t, int c2, int s, std::uint64_t seed) {
  require_parity(t);
  if (!segre_feasible(r, t, c2, s)) {
    throw FeasibilityError("no extension with Segre invariant 2s - t for this type");
  }
  const int ell = cycle_length(r, t, c2, s);
  WitnessConfig out;
  out.no_curve_degree = 2 * s - 1 - t;
  out.cb_degree = extension_twist_degree(r, s, t);
  if (s <= 0) {
    // every twist is negative here; collinear points maximize quotient sections
    out.points = gen_collinear(ell, seed);
    out.no_curve = lies_on_no_curve(out.points, out.no_curve_degree);
    out.cayley_bacharach = cayley_bacharach(out.points, out.cb_degree);
    return out;
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    out.points = random_points(ell, attempt_seed(seed, attempt));
    out.no_curve = lies_on_no_curve(out.points, out.no_curve_degree);
    if (!out.no_curve) continue;
    out.cayley_bacharach = cayley_bacharach(out.points, out.cb_degree);
    if (out.cayley_bacharach) return out;
  }
  throw GenerationError("no witness configuration found for (r=" + std::to_string(r) + ", t=" +
                        std::to_string(t) + ", c2=" + std::to_string(c2) + ", s=" +
                        std::to_string(s) + ")");
}

}  // namespace cohsys
