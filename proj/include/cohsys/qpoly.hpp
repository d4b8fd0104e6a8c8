#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cohsys/rational.hpp"

namespace cohsys {

enum class Ordering { Less, Equal, Greater };

std::string to_string(Ordering o);
Ordering reverse(Ordering o);

/// Polynomial in one formal variable m with rational coefficients.
///
/// Coefficients are stored low-to-high (index i holds the coefficient of m^i).
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients and
/// degree() == -1.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<Rational> coeffs);
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly constant(const Rational& c) { return QPoly({c}); }
  /// a*m + b
  static QPoly linear(const Rational& a, const Rational& b) { return QPoly({b, a}); }
  static QPoly monomial(int degree, const Rational& coeff = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of m^i; zero past the stored degree.
  Rational coeff(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& x) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly p, const Rational& c) { return p *= c; }
  friend QPoly operator*(const Rational& c, QPoly p) { return p *= c; }
  friend QPoly operator*(const QPoly& p, const QPoly& q);

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Asymptotic order: the sign of p(m) - q(m) for all sufficiently large m.
Ordering poly_compare(const QPoly& p, const QPoly& q);

inline Rational poly_eval(const QPoly& p, const Rational& x) { return p.eval(x); }

/// True iff p > 0 under the asymptotic order.
bool is_positive(const QPoly& p);

}  // namespace cohsys
