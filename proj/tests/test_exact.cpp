#include <doctest.h>

#include "heatspec/exact/coeff_expr.hpp"
#include "heatspec/exact/eigen_support.hpp"
#include "heatspec/exact/poly.hpp"
#include "heatspec/exact/rational.hpp"
#include "heatspec/exact/rational_function.hpp"
#include "heatspec/exact/sqrt_pi.hpp"

#include <cmath>
#include <random>

using namespace heatspec::exact;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rational(num(rng), den(rng));
}

RationalFunction random_rf(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Rational> n(deg(rng) + 1), d(deg(rng) + 1);
  for (auto& c : n) c = random_rational(rng);
  for (auto& c : d) c = random_rational(rng);
  // keep the denominator away from zero at integer m in the test range
  d[0] = Rational(1, 3) + abs(d[0]);
  for (std::size_t k = 1; k < d.size(); ++k) d[k] = abs(d[k]);
  return RationalFunction(Poly(n, 'm'), Poly(d, 'm'));
}

CoeffExpr random_expr(std::mt19937& rng) {
  CoeffExpr x;
  for (int k = 0; k < 3; ++k) x += CoeffExpr::term(random_rf(rng), k);
  return x;
}

// Gamma via the recursion from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
SqrtPiNumber gamma_by_recursion(int j) {
  SqrtPiNumber g = (j % 2 == 0) ? SqrtPiNumber(1) : SqrtPiNumber::monomial(Rational(1), 1);
  for (int k = (j % 2 == 0) ? 2 : 1; k < j; k += 2) g *= SqrtPiNumber(Rational(k, 2));
  return g;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).denominator() == 2);
  CHECK(Rational::parse("2.5e-3") == Rational(1, 400));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse(" 12 ") == Rational(12));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(factorial(5) == Rational(120));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("gaussian rationals") {
  const GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  const GaussRational z(Rational(1, 2), Rational(-3));
  CHECK(conj(conj(z)) == z);
  CHECK(z / z == GaussRational(1));
  CHECK((z * conj(z)).is_real());
}

TEST_CASE("polynomials") {
  const Poly t = Poly::variable('t');
  const Poly p = t * t - Poly(Rational(1), 't');
  CHECK(p.degree() == 2);
  CHECK(Poly('t').degree() == Poly::kZeroDegree);
  CHECK((p - p).is_zero());
  CHECK(derivative(antiderivative(p)) == p);
  CHECK(antiderivative(p).coeff(0).is_zero());
  const auto [q, r] = divmod(p, t - Poly(Rational(1), 't'));
  CHECK(q == t + Poly(Rational(1), 't'));
  CHECK(r.is_zero());
  CHECK(gcd(p, t * t + Poly(Rational(2), 't') * t + Poly(Rational(1), 't')) == t + Poly(Rational(1), 't'));
  CHECK(p(Rational(3)) == Rational(8));
  CHECK_THROWS(p + Poly::variable('a'));
}

TEST_CASE("rational functions normalize") {
  const RationalFunction m = RationalFunction::m();
  const RationalFunction x = (m * m - RationalFunction(1)) / (RationalFunction(2) * m - RationalFunction(2));
  CHECK(x == (m + RationalFunction(1)) / RationalFunction(2));
  CHECK(x.den().leading() == Rational(1));
  CHECK_THROWS_AS((RationalFunction(1) / (m - RationalFunction(2)))(Rational(2)), PoleError);
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half(1) == SqrtPiNumber::monomial(Rational(1), 1));
  CHECK(gamma_half(4) == SqrtPiNumber(1));
  CHECK(gamma_half(5) == SqrtPiNumber::monomial(Rational(3, 4), 1));
  for (int j = 1; j <= 30; ++j) CHECK(gamma_half(j) == gamma_by_recursion(j));
  CHECK(gamma_at(Rational(7, 2)) == gamma_half(7));
  CHECK_THROWS(gamma_at(Rational(1, 3)));
  CHECK_THROWS(gamma_at(Rational(0)));
  CHECK_THROWS(gamma_at(Rational(-2)));
  // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4 sqrt(pi) / 3
  CHECK(gamma_at(Rational(-1, 2)) == SqrtPiNumber::monomial(Rational(-2), 1));
  CHECK(gamma_at(Rational(-3, 2)) == SqrtPiNumber::monomial(Rational(4, 3), 1));
}

TEST_CASE("beta values") {
  CHECK(beta_value(4) == SqrtPiNumber::monomial(Rational(4, 3), -2));
  CHECK(beta_value(5) == SqrtPiNumber(Rational(3, 8)));
  CHECK(beta_value(6) == SqrtPiNumber::monomial(Rational(16, 15), -2));
  for (int m = 4; m <= 40; ++m) {
    const double direct = std::tgamma(m / 2.0) / (std::tgamma(0.5) * std::tgamma((m + 1) / 2.0));
    CHECK(std::abs(beta_value(m).to_double() - direct) <= 1e-14 * direct);
  }
}

TEST_CASE("float projection of gamma ratios") {
  for (int j = 1; j <= 60; ++j) {
    for (int k = 1; k <= 60; k += 7) {
      const SqrtPiNumber q = gamma_half(j) / gamma_half(k);
      const double direct = std::tgamma(j / 2.0) / std::tgamma(k / 2.0);
      CHECK(std::abs(q.to_double() - direct) <= 1e-14 * direct);
    }
  }
}

TEST_CASE("coeffexpr evaluation") {
  CHECK(CoeffExpr::beta().eval(4) == SqrtPiNumber::monomial(Rational(4, 3), -2));
  CHECK(CoeffExpr().eval(7).is_zero());
  const CoeffExpr m = CoeffExpr::m();
  const CoeffExpr x = (m - CoeffExpr(3)) / RationalFunction(8) *
                      ((m - CoeffExpr(1)) / (RationalFunction::m() - RationalFunction(2)) * CoeffExpr::beta() -
                       CoeffExpr(1));
  const SqrtPiNumber expected = SqrtPiNumber(Rational(-1, 8)) + SqrtPiNumber::monomial(Rational(1, 4), -2);
  CHECK(x.eval(4) == expected);
  const CoeffExpr pole = CoeffExpr::beta() / (RationalFunction::m() - RationalFunction(3));
  CHECK_THROWS_AS(pole.eval(3), PoleError);
  CHECK(pole.to_string() == "(1)/(m - 3)·beta");
}

TEST_CASE("field axioms and evaluation homomorphism") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const CoeffExpr x = random_expr(rng), y = random_expr(rng), z = random_expr(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    for (int mm : {4, 6, 9}) {
      CHECK((x * y).eval(mm) == x.eval(mm) * y.eval(mm));
      CHECK((x + y).eval(mm) == x.eval(mm) + y.eval(mm));
    }
  }
}

TEST_CASE("rendering") {
  CHECK(SqrtPiNumber::monomial(Rational(4, 3), -2).to_string() == "4/3·pi^-1");
  CHECK(SqrtPiNumber::monomial(Rational(1, 2), 2).to_string() == "1/2·pi");
  CHECK((SqrtPiNumber::monomial(Rational(-3), 1) + SqrtPiNumber::monomial(Rational(5), -3)).to_string() ==
        "-3·pi^(1/2) + 5·pi^(-3/2)");
  CHECK(SqrtPiNumber().to_string() == "0");
  CHECK(CoeffExpr(Rational(1, 32)).to_string() == "1/32");
}

TEST_CASE("exact matrix inverse") {
  QMatrix a(2, 2);
  a << Rational(2), Rational(1), Rational(1), Rational(1);
  const QMatrix inv = inverse(a);
  const QMatrix prod = a * inv;
  CHECK(prod(0, 0) == Rational(1));
  CHECK(prod(0, 1) == Rational(0));
  QMatrix s = QMatrix::Constant(2, 2, Rational(1));
  CHECK_THROWS(inverse(s));
}
