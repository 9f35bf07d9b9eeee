#pragma once

#include "heatspec/exact/rational.hpp"

#include <map>
#include <string>

namespace heatspec::exact {

/// Finite Laurent polynomial sum_k c_k (sqrt(pi))^k with rational c_k.
class SqrtPiNumber {
 public:
  SqrtPiNumber() = default;
  SqrtPiNumber(const Rational& c) { add(0, c); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  SqrtPiNumber(I c) : SqrtPiNumber(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * (sqrt(pi))^k
  static SqrtPiNumber monomial(const Rational& c, int k);
  static SqrtPiNumber pi() { return monomial(Rational(1), 2); }

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int k) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  double to_double() const;

  SqrtPiNumber operator-() const;
  SqrtPiNumber& operator+=(const SqrtPiNumber& o);
  SqrtPiNumber& operator-=(const SqrtPiNumber& o);
  SqrtPiNumber& operator*=(const SqrtPiNumber& o);
  /// Only monomial divisors are supported; anything else throws.
  SqrtPiNumber& operator/=(const SqrtPiNumber& o);

  friend SqrtPiNumber operator+(SqrtPiNumber a, const SqrtPiNumber& b) { return a += b; }
  friend SqrtPiNumber operator-(SqrtPiNumber a, const SqrtPiNumber& b) { return a -= b; }
  friend SqrtPiNumber operator*(SqrtPiNumber a, const SqrtPiNumber& b) { return a *= b; }
  friend SqrtPiNumber operator/(SqrtPiNumber a, const SqrtPiNumber& b) { return a /= b; }
  friend bool operator==(const SqrtPiNumber& a, const SqrtPiNumber& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "4/3·pi^-1" or "-1/8 + 1/4·pi^(1/2)".
  std::string to_string() const;

 private:
  void add(int k, const Rational& c);

  std::map<int, Rational> terms_;
};

SqrtPiNumber pow(const SqrtPiNumber& x, int n);
std::ostream& operator<<(std::ostream& os, const SqrtPiNumber& x);

/// Gamma(j/2) for j >= 1.
SqrtPiNumber gamma_half(int j);
/// Gamma(x) for x a half-integer or a positive integer.
SqrtPiNumber gamma_at(const Rational& x);
/// Gamma(m/2) / (Gamma(1/2) Gamma((m+1)/2)).
SqrtPiNumber beta_value(int m);

inline constexpr double kSqrtPi = 1.7724538509055160273;

}  // namespace heatspec::exact
