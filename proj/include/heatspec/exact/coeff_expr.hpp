#pragma once

#include "heatspec/exact/rational_function.hpp"
#include "heatspec/exact/sqrt_pi.hpp"

#include <map>
#include <string>

namespace heatspec::exact {

/// Element of Q(m)[beta]: sum_k r_k(m) beta^k with beta a free symbol.
class CoeffExpr {
 public:
  CoeffExpr() = default;
  CoeffExpr(const RationalFunction& r) { add(0, r); }  // NOLINT(google-explicit-constructor)
  CoeffExpr(const Rational& c) : CoeffExpr(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  CoeffExpr(I c) : CoeffExpr(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static CoeffExpr beta() { return term(RationalFunction(1), 1); }
  static CoeffExpr m() { return CoeffExpr(RationalFunction::m()); }
  static CoeffExpr term(const RationalFunction& r, int beta_power);

  const std::map<int, RationalFunction>& terms() const { return terms_; }
  RationalFunction coeff(int beta_power) const;
  bool is_zero() const { return terms_.empty(); }

  /// Substitutes m and beta(m).
  SqrtPiNumber eval(int m) const;
  /// Substitutes m only, keeping beta symbolic: beta power -> rational.
  std::map<int, Rational> at_m(const Rational& m) const;

  CoeffExpr operator-() const;
  CoeffExpr& operator+=(const CoeffExpr& o);
  CoeffExpr& operator-=(const CoeffExpr& o);
  CoeffExpr& operator*=(const CoeffExpr& o);
  /// Division by a beta-free expression.
  CoeffExpr& operator/=(const RationalFunction& r);

  friend CoeffExpr operator+(CoeffExpr a, const CoeffExpr& b) { return a += b; }
  friend CoeffExpr operator-(CoeffExpr a, const CoeffExpr& b) { return a -= b; }
  friend CoeffExpr operator*(CoeffExpr a, const CoeffExpr& b) { return a *= b; }
  friend CoeffExpr operator/(CoeffExpr a, const RationalFunction& r) { return a /= r; }
  friend bool operator==(const CoeffExpr& a, const CoeffExpr& b) { return a.terms_ == b.terms_; }

  /// "p(m)/q(m)·beta^k" terms joined by " + ".
  std::string to_string() const;

 private:
  void add(int k, const RationalFunction& r);

  std::map<int, RationalFunction> terms_;
};

std::ostream& operator<<(std::ostream& os, const CoeffExpr& x);

}  // namespace heatspec::exact
