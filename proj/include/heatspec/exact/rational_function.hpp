#pragma once

#include "heatspec/exact/poly.hpp"

#include <stdexcept>
#include <string>

namespace heatspec::exact {

/// Raised when a rational function is evaluated at a zero of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient of polynomials in m, kept with gcd(num, den) = 1 and a monic
/// denominator so that structural equality is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : num_('m'), den_(Rational(1), 'm') {}
  RationalFunction(const Rational& c) : num_(c, 'm'), den_(Rational(1), 'm') {}  // NOLINT
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(Poly num, Poly den = Poly(Rational(1), 'm'));

  /// The identity function m.
  static RationalFunction m() { return RationalFunction(Poly::variable('m')); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws PoleError when the denominator vanishes at m.
  Rational operator()(const Rational& m) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace heatspec::exact
