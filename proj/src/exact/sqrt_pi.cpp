#include "heatspec/exact/sqrt_pi.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace heatspec::exact {

SqrtPiNumber SqrtPiNumber::monomial(const Rational& c, int k) {
  SqrtPiNumber r;
  r.add(k, c);
  return r;
}

void SqrtPiNumber::add(int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SqrtPiNumber::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

double SqrtPiNumber::to_double() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += c.to_double() * std::pow(kSqrtPi, k);
  return s;
}

SqrtPiNumber SqrtPiNumber::operator-() const {
  SqrtPiNumber r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SqrtPiNumber& SqrtPiNumber::operator+=(const SqrtPiNumber& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SqrtPiNumber& SqrtPiNumber::operator-=(const SqrtPiNumber& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

SqrtPiNumber& SqrtPiNumber::operator*=(const SqrtPiNumber& o) {
  SqrtPiNumber r;
  for (const auto& [j, a] : terms_)
    for (const auto& [k, b] : o.terms_) r.add(j + k, a * b);
  *this = std::move(r);
  return *this;
}

SqrtPiNumber& SqrtPiNumber::operator/=(const SqrtPiNumber& o) {
  if (!o.is_monomial()) throw std::domain_error("SqrtPiNumber: division by a non-monomial");
  const auto& [k, c] = *o.terms_.begin();
  SqrtPiNumber r;
  for (const auto& [j, a] : terms_) r.add(j - k, a / c);
  *this = std::move(r);
  return *this;
}

std::string SqrtPiNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    os << abs(c);
    if (k == 2) os << "·pi";
    else if (k % 2 == 0 && k != 0) os << "·pi^" << k / 2;
    else if (k != 0) os << "·pi^(" << k << "/2)";
  }
  return os.str();
}

SqrtPiNumber pow(const SqrtPiNumber& x, int n) {
  if (n < 0) return SqrtPiNumber(1) / pow(x, -n);
  SqrtPiNumber r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

std::ostream& operator<<(std::ostream& os, const SqrtPiNumber& x) { return os << x.to_string(); }

SqrtPiNumber gamma_half(int j) {
  if (j < 1) throw std::domain_error("gamma_half: j must be positive");
  if (j % 2 == 0) return SqrtPiNumber(factorial(j / 2 - 1));
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = (j - 1) / 2;
  const Rational c = factorial(2 * k) / (pow(Rational(4), k) * factorial(k));
  return SqrtPiNumber::monomial(c, 1);
}

SqrtPiNumber gamma_at(const Rational& x) {
  const Rational twice = x * Rational(2);
  if (!twice.is_integer() || (x.is_integer() && x.sign() <= 0))
    throw std::domain_error("gamma_at: argument must be an integer or half-integer off the poles, got " + x.to_string());
  if (x.sign() > 0) return gamma_half(static_cast<int>(twice.numerator().get_si()));
  // Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1))
  Rational shifted = x;
  Rational denom(1);
  while (shifted.sign() <= 0) {
    denom *= shifted;
    shifted += Rational(1);
  }
  return gamma_at(shifted) / SqrtPiNumber(denom);
}

SqrtPiNumber beta_value(int m) {
  if (m < 1) throw std::domain_error("beta_value: m must be positive");
  return gamma_half(m) / (gamma_half(1) * gamma_half(m + 1));
}

}  // namespace heatspec::exact
