#include "cohsys/rational.hpp"

#include <limits>
#include <ostream>

#include "cohsys/errors.hpp"

namespace cohsys {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw PreconditionError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!digits_ok(num, true)) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(strip_plus(num)), 10);
  if (slash == std::string_view::npos) return Rational(n, mpz_class(1));
  const std::string_view den = text.substr(slash + 1);
  if (!digits_ok(den, false)) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(n, mpz_class(std::string(den), 10));
}

std::int64_t Rational::to_int() const {
  if (!is_integer()) throw PreconditionError(to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw PreconditionError(to_string() + " does not fit in 64 bits");
  return n.get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

mpz_class floor(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.value().get_num_mpz_t(), q.value().get_den_mpz_t());
  return out;
}

}  // namespace cohsys
