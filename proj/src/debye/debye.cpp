#include "heatspec/debye/debye.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatspec::debye {

using exact::Rational;

DebyePolynomial debye_u0() { return {}; }

DebyePolynomial debye_next(const DebyePolynomial& u) {
  const Poly t2 = Poly::monomial(Rational(1), 2, 't');
  const Poly one(Rational(1), 't');
  const Poly first = Rational(1, 2) * t2 * (one - t2) * exact::derivative(u.poly);
  const Poly weight = one - Rational(5) * t2;
  const Poly second = Rational(1, 8) * exact::antiderivative(weight * u.poly);
  return {u.order + 1, first + second};
}

std::vector<DebyePolynomial> debye_polynomials(int max_l) {
  if (max_l < 0) throw std::invalid_argument("debye_polynomials: negative order");
  std::vector<DebyePolynomial> u{debye_u0()};
  for (int l = 0; l < max_l; ++l) u.push_back(debye_next(u.back()));
  return u;
}

std::vector<CumulantPolynomial> cumulants(int max_q) {
  if (max_q < 1) throw std::invalid_argument("cumulants: max_q must be >= 1");
  const auto u = debye_polynomials(max_q);
  // q u_q = sum_{k=1}^{q} k D_k u_{q-k}
  std::vector<CumulantPolynomial> d;
  for (int q = 1; q <= max_q; ++q) {
    Poly acc = u[q].poly;
    for (int k = 1; k < q; ++k) acc -= Rational(k, q) * d[k - 1].poly * u[q - k].poly;
    d.push_back({q, acc});
  }
  return d;
}

std::vector<Poly> exponentiate(const std::vector<CumulantPolynomial>& d, int max_order) {
  // E_q = (1/q) sum_{k=1}^{q} k D_k E_{q-k}
  std::vector<Poly> e{Poly(Rational(1), 't')};
  for (int q = 1; q <= max_order; ++q) {
    Poly acc('t');
    for (int k = 1; k <= q && k <= static_cast<int>(d.size()); ++k)
      acc += Rational(k, q) * d[k - 1].poly * e[q - k];
    e.push_back(acc);
  }
  return e;
}

EtaT eta_and_t(double z) {
  if (!(z > 0.0)) throw std::domain_error("eta_and_t: z must be positive");
  const double r = std::hypot(1.0, z);
  return {r + std::log(z / (1.0 + r)), 1.0 / r};
}

double bessel_i_uniform(double p, double z, int L) {
  if (L < 0) throw std::invalid_argument("bessel_i_uniform: negative truncation order");
  const auto [eta, t] = eta_and_t(z);
  const auto u = debye_polynomials(L);
  double series = 1.0;
  double pk = 1.0;
  for (int l = 1; l <= L; ++l) {
    pk *= p;
    series += u[l].poly(t) / pk;
  }
  const double lead = std::exp(p * eta) / (std::sqrt(2.0 * std::numbers::pi * p) * std::pow(1.0 + z * z, 0.25));
  return lead * series;
}

}  // namespace heatspec::debye
