#pragma once

#include "heatspec/exact/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace heatspec::exact {

/// Dense univariate polynomial with rational coefficients. The variable is
/// carried as a one-character tag ('t', 'a', 'm', ...) so that accidental
/// mixing of polynomials in different variables is caught. Trailing zero
/// coefficients are always trimmed; the zero polynomial has degree
/// Poly::kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(char var = 'x') : var_(var) {}
  Poly(Rational constant, char var);
  Poly(std::vector<Rational> coeffs, char var);

  static Poly variable(char var) { return monomial(Rational(1), 1, var); }
  static Poly monomial(Rational c, int degree, char var);

  char var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return coeff(degree()); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  char merged_var(const Poly& o) const;

  std::vector<Rational> c_;
  char var_;
};

Poly derivative(const Poly& p);
/// Antiderivative with zero constant term.
Poly antiderivative(const Poly& p);
/// Euclidean division: returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Monic greatest common divisor (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
/// Substitutes x -> c*x.
Poly scale_argument(const Poly& p, const Rational& c);

}  // namespace heatspec::exact
