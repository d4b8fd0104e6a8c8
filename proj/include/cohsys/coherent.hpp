#pragma once

#include "cohsys/qpoly.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

/// Numerical type (2, c1 = 2r - t, c2, k) of a coherent system on P^2.
struct CsType {
  int r = 0;
  int t = 0;  ///< parity of c1: 0 or 1
  int c2 = 0;
  int k = 0;  ///< dim V

  /// Validating constructor; throws PreconditionError unless t is 0 or 1 and k >= 0.
  static CsType make(int r, int t, int c2, int k);

  int c1() const { return 2 * r - t; }
  /// mu(E) = c1 / 2.
  Rational slope() const { return Rational(c1(), 2); }

  friend bool operator==(const CsType&, const CsType&) = default;
};

/// Numerical data (c1(L), dim W) of a line-bundle coherent subsystem.
struct SubsystemData {
  int c1L = 0;
  int w = 0;

  friend bool operator==(const SubsystemData&, const SubsystemData&) = default;
};

/// Linear stability parameter alpha(m) = a m + b.
struct AlphaLinear {
  Rational a;
  Rational b;

  QPoly poly() const { return QPoly::linear(a, b); }
  /// alpha > 0 under the asymptotic order.
  bool positive() const { return a.sign() > 0 || (a.is_zero() && b.sign() > 0); }

  friend bool operator==(const AlphaLinear&, const AlphaLinear&) = default;
};

/// p^alpha_(E,V) = (k/2) alpha + P_E / 2.
QPoly reduced_hilbert_rank2(const CsType& cs, const QPoly& alpha);

/// p^alpha_(L,W) = w alpha + P_L.
QPoly reduced_hilbert_sub(const SubsystemData& sub, const QPoly& alpha);

/// mu_a(E,V) - mu_a(L,W) = (c1/2 - c1L) + a (k/2 - w).
Rational slope_gap_a(const CsType& cs, const SubsystemData& sub, const Rational& a);

void require_parity(int t);

}  // namespace cohsys
