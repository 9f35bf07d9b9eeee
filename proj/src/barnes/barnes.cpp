#include "heatspec/barnes/barnes.hpp"

#include <stdexcept>

namespace heatspec::barnes {

namespace {

using Series = std::vector<Rational>;

Series series_inverse(const Series& s, int order) {
  if (s.empty() || s[0].is_zero()) throw std::domain_error("series_inverse: zero constant term");
  Series r(order + 1);
  r[0] = Rational(1) / s[0];
  for (int n = 1; n <= order; ++n) {
    Rational acc;
    for (int k = 1; k <= n && k < static_cast<int>(s.size()); ++k) acc += s[k] * r[n - k];
    r[n] = -acc / s[0];
  }
  return r;
}

Series series_mul(const Series& a, const Series& b, int order) {
  Series r(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// t / (1 - e^{-t}) to the power d, truncated at t^order.
Series todd_power(int d, int order) {
  Series base(order + 1);
  for (int k = 0; k <= order; ++k) base[k] = Rational(k % 2 == 0 ? 1 : -1) / exact::factorial(k + 1);
  const Series inv = series_inverse(base, order);
  Series r(order + 1);
  r[0] = Rational(1);
  for (int i = 0; i < d; ++i) r = series_mul(r, inv, order);
  return r;
}

}  // namespace

GenBernoulli gen_bernoulli(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("gen_bernoulli: need n >= 0 and d >= 1");
  // (-1)^n n! [t^n] e^{-at} (t/(1-e^{-t}))^d
  const Series todd = todd_power(d, n);
  Poly acc('a');
  for (int k = 0; k <= n; ++k) {
    // [t^k] e^{-at} = (-a)^k / k!
    const Rational c = todd[n - k] * Rational(k % 2 == 0 ? 1 : -1) / exact::factorial(k);
    acc += Poly::monomial(c, k, 'a');
  }
  acc *= exact::factorial(n) * Rational(n % 2 == 0 ? 1 : -1);
  return {n, d, acc};
}

BarnesResidueValue barnes_residue(int z, int d) {
  if (d < 1) throw std::invalid_argument("barnes_residue: d must be positive");
  if (z < 1 || z > d) return {z, d, Poly('a')};
  const Rational sign((d + z) % 2 == 0 ? 1 : -1);
  const Rational c = sign / (exact::factorial(z - 1) * exact::factorial(d - z));
  return {z, d, c * gen_bernoulli(d - z, d).poly};
}

Poly barnes_value_nonpositive(int k, int d) {
  if (k < 0 || d < 1) throw std::invalid_argument("barnes_value_nonpositive: need k >= 0 and d >= 1");
  const Rational sign(d % 2 == 0 ? 1 : -1);
  return sign * exact::factorial(k) / exact::factorial(d + k) * gen_bernoulli(d + k, d).poly;
}

long spinor_dimension(int m) {
  if (m < 4 || m % 2 != 0) throw std::domain_error("spinor_dimension: only even m >= 4 is supported");
  return 1L << (m / 2);
}

long multiplicity(int n, int m) {
  if (n < 0) throw std::invalid_argument("multiplicity: negative n");
  const Rational v = Rational(spinor_dimension(m)) * exact::binomial(m + n - 2, n) / Rational(2);
  if (!v.is_integer() || !v.numerator().fits_slong_p()) throw std::overflow_error("multiplicity: out of range");
  return v.numerator().get_si();
}

MultiplicityTable multiplicity_table(int m, int n_max) {
  MultiplicityTable t{m, spinor_dimension(m), {}};
  for (int n = 0; n <= n_max; ++n)
    t.entries.push_back(Rational(t.d_s) * exact::binomial(m + n - 2, n) / Rational(2));
  return t;
}

SqrtPiNumber base_zeta_residue(const Rational& s0, int m) {
  const long ds = spinor_dimension(m);
  const Rational sigma = Rational(2) * s0;
  if (!sigma.is_integer()) return {};
  const long z = sigma.numerator().get_si();
  const int d = m - 1;
  if (z < 1 || z > d) return {};
  // Res_s f(2s) = Res_sigma f(sigma) / 2, and 2 d_s / 2 = d_s.
  const Rational a(m - 2, 2);
  return SqrtPiNumber(Rational(ds) * barnes_residue(static_cast<int>(z), d).value(a));
}

SqrtPiNumber base_zeta_value_nonpositive(int k, int m) {
  const long ds = spinor_dimension(m);
  const Rational a(m - 2, 2);
  return SqrtPiNumber(Rational(2 * ds) * barnes_value_nonpositive(k, m - 1)(a));
}

}  // namespace heatspec::barnes
