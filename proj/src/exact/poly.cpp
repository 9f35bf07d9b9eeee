#include "heatspec/exact/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace heatspec::exact {

namespace {
const Rational kZero{0};
}

Poly::Poly(Rational constant, char var) : var_(var) {
  c_.push_back(std::move(constant));
  trim();
}

Poly::Poly(std::vector<Rational> coeffs, char var) : c_(std::move(coeffs)), var_(var) { trim(); }

Poly Poly::monomial(Rational c, int degree, char var) {
  if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v), var);
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

char Poly::merged_var(const Poly& o) const {
  if (var_ == o.var_) return var_;
  if (o.is_constant()) return var_;
  if (is_constant()) return o.var_;
  throw std::invalid_argument(std::string("Poly: mixing variables '") + var_ + "' and '" + o.var_ + "'");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = merged_var(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  const char v = merged_var(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    var_ = v;
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  var_ = v;
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_ != b.c_) return false;
  return a.var_ == b.var_ || a.is_constant();
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly(p.var());
  std::vector<Rational> r(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) r[static_cast<std::size_t>(k - 1)] = p.coeff(k) * Rational(k);
  return Poly(std::move(r), p.var());
}

Poly antiderivative(const Poly& p) {
  if (p.is_zero()) return Poly(p.var());
  std::vector<Rational> r(static_cast<std::size_t>(p.degree()) + 2);
  for (int k = 0; k <= p.degree(); ++k) r[static_cast<std::size_t>(k + 1)] = p.coeff(k) / Rational(k + 1);
  return Poly(std::move(r), p.var());
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("Poly divmod: division by the zero polynomial");
  const char v = num.is_constant() ? den.var() : num.var();
  Poly q(v);
  Poly r = num;
  while (!r.is_zero() && r.degree() >= den.degree()) {
    const int shift = r.degree() - den.degree();
    Poly t = Poly::monomial(r.leading() / den.leading(), shift, v);
    q += t;
    r -= t * den;
  }
  return {q, r};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Poly scale_argument(const Poly& p, const Rational& c) {
  std::vector<Rational> r = p.coeffs();
  Rational f(1);
  for (auto& x : r) {
    x *= f;
    f *= c;
  }
  return Poly(std::move(r), p.var());
}

}  // namespace heatspec::exact
