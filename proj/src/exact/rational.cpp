#include "heatspec/exact/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace heatspec::exact {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    try {
      return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational::parse: malformed fraction '" + s + "'");
    }
  }

  // Decimal with optional exponent.
  std::string mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    try {
      exponent = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational::parse: malformed exponent in '" + s + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("Rational::parse: malformed decimal '" + s + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("Rational::parse: malformed number '" + s + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("Rational::parse: no digits in '" + s + "'");

  mpz_class num(digits);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? Rational(num * scale, mpz_class(1)) : Rational(num, scale);
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("Rational pow: zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r, mpz_class(1));
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r, mpz_class(1));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (norm.is_zero()) throw std::domain_error("GaussRational: division by zero");
  *this *= conj(o);
  re /= norm;
  im /= norm;
  return *this;
}

std::string GaussRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return im.to_string() + "i";
  return re.to_string() + (im.sign() < 0 ? "-" : "+") + abs(im).to_string() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

}  // namespace heatspec::exact
