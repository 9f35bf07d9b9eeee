#include "heatspec/exact/coeff_expr.hpp"

#include <ostream>

namespace heatspec::exact {

CoeffExpr CoeffExpr::term(const RationalFunction& r, int beta_power) {
  CoeffExpr x;
  x.add(beta_power, r);
  return x;
}

void CoeffExpr::add(int k, const RationalFunction& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalFunction CoeffExpr::coeff(int beta_power) const {
  auto it = terms_.find(beta_power);
  return it == terms_.end() ? RationalFunction() : it->second;
}

SqrtPiNumber CoeffExpr::eval(int m) const {
  SqrtPiNumber out;
  if (terms_.empty()) return out;
  const SqrtPiNumber b = beta_value(m);
  for (const auto& [k, r] : terms_) out += SqrtPiNumber(r(Rational(m))) * pow(b, k);
  return out;
}

std::map<int, Rational> CoeffExpr::at_m(const Rational& m) const {
  std::map<int, Rational> out;
  for (const auto& [k, r] : terms_) {
    Rational v = r(m);
    if (!v.is_zero()) out.emplace(k, std::move(v));
  }
  return out;
}

CoeffExpr CoeffExpr::operator-() const {
  CoeffExpr x;
  for (const auto& [k, r] : terms_) x.terms_.emplace(k, -r);
  return x;
}

CoeffExpr& CoeffExpr::operator+=(const CoeffExpr& o) {
  for (const auto& [k, r] : o.terms_) add(k, r);
  return *this;
}

CoeffExpr& CoeffExpr::operator-=(const CoeffExpr& o) {
  for (const auto& [k, r] : o.terms_) add(k, -r);
  return *this;
}

CoeffExpr& CoeffExpr::operator*=(const CoeffExpr& o) {
  CoeffExpr x;
  for (const auto& [j, a] : terms_)
    for (const auto& [k, b] : o.terms_) x.add(j + k, a * b);
  *this = std::move(x);
  return *this;
}

CoeffExpr& CoeffExpr::operator/=(const RationalFunction& r) {
  for (auto& [k, c] : terms_) c /= r;
  return *this;
}

std::string CoeffExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, r] : terms_) {
    if (!s.empty()) s += " + ";
    const bool wrap = k > 0 && r.den().is_constant() && !r.num().is_constant();
    s += wrap ? "(" + r.to_string() + ")" : r.to_string();
    if (k == 1) s += "·beta";
    else if (k > 1) s += "·beta^" + std::to_string(k);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const CoeffExpr& x) { return os << x.to_string(); }

}  // namespace heatspec::exact
