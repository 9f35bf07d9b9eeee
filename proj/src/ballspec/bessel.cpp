#include "heatspec/ballspec/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace heatspec::ballspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-280;
constexpr int kMaxIter = 100000;

// (x/2)^nu / Gamma(nu+1) as a product over the integer part of nu; lgamma of
// a large argument would cost digits.
double series_prefactor(double nu, double x) {
  const double h = 0.5 * x;
  const int n = static_cast<int>(std::floor(nu));
  const double frac = nu - n;
  double r = frac == 0.0 ? 1.0 : std::pow(h, frac) / std::tgamma(frac + 1.0);
  for (int k = 1; k <= n; ++k) r *= h / (frac + k);
  return r;
}

BesselValue series(double nu, double x) {
  if (x == 0.0) {
    if (nu == 0.0) return {1.0, 0.0};
    return {0.0, nu == 1.0 ? 0.5 : 0.0};
  }
  // J_nu = pre * sum_k (-q)^k / (k! (nu+1)_k), q = x^2/4
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0, dsum = 0.0;  // dsum = sum_k k * term_k
  for (int k = 1; k < 1000; ++k) {
    term *= -q / (k * (nu + k));
    sum += term;
    dsum += k * term;
    if (std::abs(term) < 0.25 * kEps * std::abs(sum) && k > 2) break;
  }
  const double pre = series_prefactor(nu, x);
  const double j = pre * sum;
  // x J' = nu J + 2 pre * sum_k k term_k
  const double jp = (nu * j + 2.0 * pre * dsum) / x;
  return {j, jp};
}

// Steed/Temme scheme (CF1 + downward recurrence + CF2) for x >= 2.
// Evaluated in long double: CF1 needs O(x) steps and the error grows with them.
BesselValue steed(double nu_in, double x_in) {
  using R = long double;
  const R nu = nu_in, x = x_in;
  constexpr R eps = std::numeric_limits<R>::epsilon();
  constexpr R tiny = 1e-280L;
  const int nl = static_cast<int>(nu + 0.5);
  const R mu = nu - nl;
  const R mu2 = mu * mu;
  const R xi = 1.0 / x, xi2 = 2.0 * xi;
  const R w = xi2 / std::numbers::pi_v<R>;

  // CF1: f = J'_nu / J_nu
  int isign = 1;
  R h = nu * xi;
  if (h < tiny) h = tiny;
  R b = xi2 * nu, d = 0.0, c = h;
  int i = 0;
  for (; i < kMaxIter; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < tiny) d = tiny;
    c = b - 1.0 / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const R del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < eps) break;
  }
  if (i == kMaxIter) throw std::runtime_error("bessel_j: continued fraction did not converge");

  // downward recurrence nu -> mu, rescaling to stay in range
  R rjl = isign * 1e-200L, rjpl = h * rjl;
  R rjl1 = rjl, rjp1 = rjpl;
  R fact = nu * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const R rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
    if (std::abs(rjl) > 1e200L) {
      rjl *= 1e-200L;
      rjpl *= 1e-200L;
      rjl1 *= 1e-200L;
      rjp1 *= 1e-200L;
    }
  }
  if (rjl == 0.0) rjl = eps;
  const R f = rjpl / rjl;

  // CF2: p + iq
  R a = 0.25 - mu2;
  R p = -0.5 * xi, q = 1.0;
  const R br = 2.0 * x;
  R bi = 2.0;
  R fct = a * xi / (p * p + q * q);
  R cr = br + q * fct, ci = bi + p * fct;
  R den = br * br + bi * bi;
  R dr = br / den, di = -bi / den;
  R dlr = cr * dr - ci * di, dli = cr * di + ci * dr;
  R temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 1; i < kMaxIter; ++i) {
    a += 2 * i;
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < tiny) dr = tiny;
    fct = a / (cr * cr + ci * ci);
    cr = br + cr * fct;
    ci = bi - ci * fct;
    if (std::abs(cr) + std::abs(ci) < tiny) cr = tiny;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < eps) break;
  }
  if (i == kMaxIter) throw std::runtime_error("bessel_j: second continued fraction did not converge");

  const R gam = (p - f) / q;
  R rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  const R scale = rjmu / rjl;
  return {static_cast<double>(rjl1 * scale), static_cast<double>(rjp1 * scale)};
}

}  // namespace

BesselValue bessel_j_with_derivative(double nu, double x) {
  if (!(nu >= 0.0 && nu <= kMaxOrder) || !(x >= 0.0 && x <= kMaxArgument))
    throw std::domain_error("bessel_j: arguments outside 0 <= nu <= 250, 0 <= x <= 600");
  if (x <= 2.0 * std::sqrt(nu + 1.0)) return series(nu, x);
  return steed(nu, x);
}

double bessel_j(double nu, double x) { return bessel_j_with_derivative(nu, x).j; }

namespace {

double mcmahon(double p, int k) {
  const double mu = 4.0 * p * p;
  const double b = (k + 0.5 * p - 0.25) * std::numbers::pi;
  const double e = 8.0 * b;
  return b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
}

double polish(double p, double lo, double hi, double flo, double guess) {
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const BesselValue v = bessel_j_with_derivative(p, x);
    if (v.j == 0.0) return x;
    if ((v.j > 0.0) == (flo > 0.0)) lo = x; else hi = x;
    double next = (v.jp != 0.0) ? x - v.j / v.jp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * kEps * x) return next;
    x = next;
    if (hi - lo <= 4.0 * kEps * x) return x;
  }
  return x;
}

}  // namespace

std::vector<double> bessel_zeros(double p, double x_max) {
  if (!(p >= 0.0 && p <= kMaxOrder)) throw std::domain_error("bessel_zeros: order outside [0, 250]");
  x_max = std::min(x_max, kMaxArgument);
  std::vector<double> zeros;
  // j_{p,1} > p, and zeros are more than pi apart for p > 1/2
  const double step = 0.5 * std::numbers::pi;
  double lo = std::max(p, 1e-3);
  double flo = bessel_j(p, lo);
  int k = 1;
  while (lo < x_max) {
    const double hi = std::min(lo + step, x_max);
    const double fhi = bessel_j(p, hi);
    if (fhi == 0.0) {
      zeros.push_back(hi);
      ++k;
      lo = hi + 1e-9;
      flo = bessel_j(p, lo);
      continue;
    }
    if ((flo > 0.0) != (fhi > 0.0)) {
      zeros.push_back(polish(p, lo, hi, flo, mcmahon(p, k)));
      ++k;
    }
    lo = hi;
    flo = fhi;
  }
  return zeros;
}

}  // namespace heatspec::ballspec
