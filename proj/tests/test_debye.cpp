#include <doctest.h>

#include "heatspec/debye/debye.hpp"

#include <cmath>

using namespace heatspec::debye;
using heatspec::exact::Poly;
using heatspec::exact::Rational;

namespace {

Poly tpoly(std::initializer_list<std::pair<int, Rational>> terms) {
  Poly p('t');
  for (const auto& [k, c] : terms) p += Poly::monomial(c, k, 't');
  return p;
}

// I_nu(x) from its power series, summed in long double.
long double bessel_i_series(long double nu, long double x) {
  long double sum = 0.0L;
  for (int k = 0; k < 400; ++k) {
    const long double lt = (2 * k + nu) * std::log(x / 2) - std::lgamma(k + 1.0L) - std::lgamma(k + nu + 1.0L);
    const long double term = std::exp(lt);
    sum += term;
    if (k > 10 && term < 1e-22L * sum) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("first Debye polynomials") {
  const auto u = debye_polynomials(2);
  CHECK(u[0].poly == Poly(Rational(1), 't'));
  CHECK(u[1].poly == tpoly({{1, Rational(1, 8)}, {3, Rational(-5, 24)}}));
  CHECK(u[2].poly == tpoly({{2, Rational(81, 1152)}, {4, Rational(-462, 1152)}, {6, Rational(385, 1152)}}));
}

TEST_CASE("parity and degree of u_l") {
  const auto u = debye_polynomials(6);
  for (int l = 1; l <= 6; ++l) {
    CHECK(u[l].order == l);
    CHECK(u[l].poly.degree() == 3 * l);
    for (int k = 0; k <= u[l].poly.degree(); ++k)
      if ((k - l) % 2 != 0) CHECK(u[l].poly.coeff(k).is_zero());
    CHECK(u[l].poly.coeff(0).is_zero());
  }
}

TEST_CASE("cumulants") {
  const auto d = cumulants(4);
  const auto u = debye_polynomials(2);
  CHECK(d[0].poly == tpoly({{1, Rational(1, 8)}, {3, Rational(-5, 24)}}));
  CHECK(d[1].poly == tpoly({{2, Rational(1, 16)}, {4, Rational(-3, 8)}, {6, Rational(5, 16)}}));
  CHECK(d[1].poly == u[2].poly - Rational(1, 2) * u[1].poly * u[1].poly);
  CHECK(d[2].poly == tpoly({{3, Rational(25, 384)}, {5, Rational(-531, 640)}, {7, Rational(221, 128)},
                            {9, Rational(-1105, 1152)}}));
  CHECK(d[3].poly == tpoly({{4, Rational(13, 128)}, {6, Rational(-71, 32)}, {8, Rational(531, 64)},
                            {10, Rational(-339, 32)}, {12, Rational(565, 128)}}));
  for (const auto& dq : d) CHECK(dq.poly.degree() == 3 * dq.order);
}

TEST_CASE("re-exponentiation recovers the u-series") {
  for (int Q : {1, 3, 6, 8}) {
    const auto e = exponentiate(cumulants(Q), Q);
    const auto u = debye_polynomials(Q);
    for (int l = 0; l <= Q; ++l) CHECK(e[l] == u[l].poly);
  }
}

TEST_CASE("expansion variables") {
  const auto [eta, t] = eta_and_t(1.0);
  CHECK(t == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(eta == doctest::Approx(std::sqrt(2.0) + std::log(1.0 / (1.0 + std::sqrt(2.0)))).epsilon(1e-15));
  CHECK(eta == doctest::Approx(0.53284).epsilon(1e-5));
  CHECK(eta_and_t(1e8).t < 1e-7);
  CHECK_THROWS(eta_and_t(0.0));
  CHECK_THROWS(eta_and_t(-1.0));
}

TEST_CASE("uniform asymptotics against the power series") {
  const double exact = static_cast<double>(bessel_i_series(50.0L, 50.0L));
  const double err3 = std::abs(bessel_i_uniform(50.0, 1.0, 3) - exact) / exact;
  const double err2 = std::abs(bessel_i_uniform(50.0, 1.0, 2) - exact) / exact;
  const double err0 = std::abs(bessel_i_uniform(50.0, 1.0, 0) - exact) / exact;
  CHECK(err3 <= 1e-8);
  CHECK(err2 < err0);
  const auto [eta, t] = eta_and_t(1.0);
  const double lead = std::exp(50.0 * eta) / (std::sqrt(2.0 * M_PI * 50.0) * std::pow(2.0, 0.25));
  CHECK(bessel_i_uniform(50.0, 1.0, 0) == doctest::Approx(lead).epsilon(1e-15));
  for (double z : {0.3, 2.0, 5.0}) {
    const double ref = static_cast<double>(bessel_i_series(40.0L, 40.0L * z));
    CHECK(std::abs(bessel_i_uniform(40.0, z, 4) - ref) / ref <= 1e-8);
  }
}
