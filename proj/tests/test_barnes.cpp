#include <doctest.h>

#include "heatspec/barnes/barnes.hpp"

#include <cmath>
#include <cstdint>

using namespace heatspec::barnes;
using heatspec::exact::binomial;
using heatspec::exact::factorial;

namespace {

const Poly A = Poly::variable('a');
Poly c(const Rational& x) { return Poly(x, 'a'); }
Poly c(long x) { return Poly(Rational(x), 'a'); }

// Classical Bernoulli numbers from sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int j = 0; j < k; ++j) acc += binomial(k + 1, j) * b[j];
    b[k] = -acc / Rational(k + 1);
  }
  return b;
}

Poly classical_bernoulli(int n) {
  const auto b = bernoulli_numbers(n);
  Poly p('a');
  for (int k = 0; k <= n; ++k) p += Poly::monomial(binomial(n, k) * b[k], n - k, 'a');
  return p;
}

// Riemann zeta at non-positive integers: zeta(-n) = -B_{n+1}/(n+1) (with B_1 = -1/2).
Rational riemann_zeta_nonpositive(int n) {
  const auto b = bernoulli_numbers(n + 1);
  Rational bn1 = b[n + 1];
  if (n == 0) return Rational(-1, 2);
  return -bn1 / Rational(n + 1);
}

// 4 d_n(m) written as a polynomial in p = n + m/2 - 1.
std::vector<Rational> four_dn_in_p(int m) {
  // C(p + m/2 - 1, m - 2) = prod_{i=0}^{m-3} (p + m/2 - 1 - i) / (m-2)!
  Poly p(Rational(1), 'p');
  for (int i = 0; i <= m - 3; ++i) p *= Poly::variable('p') + Poly(Rational(m / 2 - 1 - i), 'p');
  p *= Rational(4) * Rational(spinor_dimension(m)) / (Rational(2) * factorial(m - 2));
  std::vector<Rational> out(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) out[k] = p.coeff(k);
  return out;
}

}  // namespace

TEST_CASE("generalized Bernoulli basics") {
  for (int d = 1; d <= 6; ++d) CHECK(gen_bernoulli(0, d).poly == c(1));
  CHECK(gen_bernoulli(1, 1).poly == A - c(Rational(1, 2)));
  for (int n = 0; n <= 12; ++n) {
    CHECK(gen_bernoulli(n, 1).poly == classical_bernoulli(n));
    CHECK(gen_bernoulli(n, 3).poly.degree() == n);
  }
}

TEST_CASE("Barnes residues match the explicit leading poles") {
  for (int d = 4; d <= 12; ++d) {
    const Rational D(d);
    CHECK(barnes_residue(d, d).value == c(Rational(1) / factorial(d - 1)));
    CHECK(barnes_residue(d - 1, d).value == (c(D) - c(2) * A) * (Rational(1) / (Rational(2) * factorial(d - 2))));
    const Poly r2 = c(12) * A * A - c(D) - c(12 * d) * A + c(3 * d * d);
    CHECK(barnes_residue(d - 2, d).value == r2 * (Rational(1) / (Rational(24) * factorial(d - 3))));
    // cubic term of the s = d-3 pole; note the linear term is 2ad
    const Poly r3 = c(-8) * A * A * A + c(12 * d) * A * A + c(2 * d) * A - c(6 * d * d) * A - c(d * d) + c(d * d * d);
    CHECK(barnes_residue(d - 3, d).value == r3 * (Rational(1) / (Rational(48) * factorial(d - 4))));
  }
  CHECK(barnes_residue(4, 4).value(Rational(1)) == Rational(1, 6));
  CHECK(barnes_residue(1, 4).value(Rational(1)) == Rational(0));
  CHECK(barnes_residue(0, 4).value.is_zero());
  CHECK(barnes_residue(5, 4).value.is_zero());
}

TEST_CASE("Barnes zeta numeric cross-check at s = 6, a = 3/2, d = 4") {
  const int N = 200000;
  const double a = 1.5;
  // multi-index counts by repeated prefix summation: #{m in N^4 : |m| = n}
  std::vector<std::uint64_t> count(N + 1, 1);
  for (int dim = 2; dim <= 4; ++dim)
    for (int n = 1; n <= N; ++n) count[n] += count[n - 1];
  long double multi = 0.0L, direct = 0.0L;
  for (int n = N; n >= 0; --n) {
    const long double w = std::pow(static_cast<long double>(n) + a, -6.0L);
    multi += static_cast<long double>(count[n]) * w;
    direct += static_cast<long double>(binomial(n + 3, 3).to_double()) * w;
  }
  CHECK(std::abs(static_cast<double>(multi - direct)) <= 1e-12 * static_cast<double>(direct));
  CHECK(static_cast<double>(direct) == doctest::Approx(0.1159585231456735753).epsilon(1e-10));
}

TEST_CASE("multiplicities") {
  CHECK(multiplicity(0, 4) == 2);
  CHECK(multiplicity(2, 4) == 12);
  CHECK(multiplicity(0, 6) == 4);
  for (int n = 0; n < 20; ++n) CHECK(multiplicity(n, 4) == (n + 1) * (n + 2));
  CHECK_THROWS(multiplicity(0, 5));
  CHECK_THROWS(multiplicity(0, 2));
  for (int m : {4, 6, 8}) {
    // d_n / n^{m-2} tends to d_s / (2 (m-2)!)
    const double limit = spinor_dimension(m) / (2.0 * factorial(m - 2).to_double());
    const double r100 = multiplicity(100, m) / std::pow(100.0, m - 2);
    const double r50 = multiplicity(50, m) / std::pow(50.0, m - 2);
    CHECK(std::abs(r100 - limit) < std::abs(r50 - limit));
    CHECK(r100 / limit == doctest::Approx(1.0).epsilon(0.25 * (m - 2)));
  }
  const auto t = multiplicity_table(6, 10);
  CHECK(t.entries.size() == 11);
  CHECK(t.d_s == 8);
}

TEST_CASE("base zeta residues and values against a Riemann zeta decomposition") {
  CHECK(base_zeta_residue(Rational(3, 2), 4) == SqrtPiNumber(2));
  CHECK(base_zeta_residue(Rational(1, 4), 4).is_zero());
  CHECK(base_zeta_residue(Rational(5, 2), 4).is_zero());
  for (int m : {4, 6, 8, 10}) {
    const int d = m - 1;
    CHECK(base_zeta_residue(Rational(d, 2), m) == SqrtPiNumber(Rational(spinor_dimension(m)) / factorial(d - 1)));
    // zeta_S(s) = sum_k c_k zeta_R(2s - k); the pole of zeta_R(2s-k) at 2s = k+1 has residue 1/2 in s.
    const auto ck = four_dn_in_p(m);
    for (int z = -3; z <= d + 2; ++z) {
      Rational expected;
      if (z >= 1 && z - 1 < static_cast<int>(ck.size())) expected = ck[z - 1] / Rational(2);
      CHECK(base_zeta_residue(Rational(z, 2), m) == SqrtPiNumber(expected));
    }
    for (int k = 0; k <= 6; ++k) {
      Rational expected;
      for (std::size_t j = 0; j < ck.size(); ++j) expected += ck[j] * riemann_zeta_nonpositive(k + static_cast<int>(j));
      CHECK(base_zeta_value_nonpositive(k, m) == SqrtPiNumber(expected));
    }
  }
}
