#include "cohsys/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cohsys/errors.hpp"

namespace cohsys {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Ordering reverse(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return Ordering::Equal;
}

QPoly::QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw PreconditionError("negative monomial degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

QPoly operator*(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return QPoly();
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) {
      if (!mag.is_integer() && i > 0) {
        os << "(" << mag << ")";
      } else {
        os << mag;
      }
    }
    if (i >= 1) os << "m";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Ordering poly_compare(const QPoly& p, const QPoly& q) {
  const int top = std::max(p.degree(), q.degree());
  for (int i = top; i >= 0; --i) {
    const auto c = p.coeff(i) <=> q.coeff(i);
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
  }
  return Ordering::Equal;
}

bool is_positive(const QPoly& p) { return !p.is_zero() && p.coefficients().back().sign() > 0; }

}  // namespace cohsys
