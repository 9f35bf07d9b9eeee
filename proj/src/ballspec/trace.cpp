#include "heatspec/ballspec/trace.hpp"

#include "heatspec/ballspec/bessel.hpp"
#include "parallel.hpp"

#include <cmath>
#include <numbers>

namespace heatspec::ballspec {

namespace {

void require_zero(double p, double mu) {
  const BesselValue v = bessel_j_with_derivative(p, mu);
  if (std::abs(v.j) > 1e-10 * std::max(1.0, std::abs(v.jp)))
    throw std::domain_error("radial integral: mu is not a zero of J_p");
}

// Weight on eigenvalues of the smeared trace; exactly 1 for F = 1.
struct Weight {
  double f0, f1, f2;
  double operator()(double p, double mu) const {
    double w = f0;
    if (f1 != 0.0) w += f1 * ((2 * p * p + 3 * p + 1) / (3 * mu * mu) + 1.0 / 3.0);
    if (f2 != 0.0) {
      const double mu2 = mu * mu;
      w += f2 * ((8 * p * p * p * p + 20 * p * p * p - 20 * p - 8) / (15 * mu2 * mu2) +
                 (4 * p * p + 10 * p + 4) / (15 * mu2) + 0.2);
    }
    return w;
  }
  // |w| <= bound for every zero (mu > p >= 1)
  double bound() const { return std::abs(f0) + 3.0 * std::abs(f1) + 4.0 * std::abs(f2); }
};

HeatTraceSample summed_trace(const BallConfig& cfg, const ZeroTable& table, const Weight& w, double t, double cutoff) {
  if (!(t > 0.0)) throw std::domain_error("heat_trace: t must be positive");
  const double mu_max = std::sqrt(cutoff / t);
  if (mu_max > kMaxArgument) throw CutoffInfeasible("heat_trace: cutoff sqrt(Lambda/t) exceeds the Bessel range");
  if (table.m != cfg.m || mu_max > table.x_max)
    throw CutoffInfeasible("heat_trace: zero table does not reach sqrt(Lambda/t)");
  std::vector<double> partial(table.orders.size(), 0.0);
  detail::parallel_for(partial.size(), [&](std::size_t n) {
    const auto& o = table.orders[n];
    double s = 0.0;
    // smallest terms first
    for (auto it = o.zeros.rbegin(); it != o.zeros.rend(); ++it) {
      if (*it > mu_max) continue;
      s += w(o.p, *it) * std::exp(-t * *it * *it);
    }
    partial[n] = cfg.degeneracy(static_cast<int>(n)) * s;
  });
  HeatTraceSample out;
  out.t = t;
  out.cutoff = cutoff;
  for (auto it = partial.rbegin(); it != partial.rend(); ++it) out.value += *it;
  out.tail_bound = w.bound() * tail_bound(cfg, t, cutoff);
  return out;
}

}  // namespace

double radial_integral_r3(double p, double mu) {
  require_zero(p, mu);
  return (2 * p * p + 3 * p + 1) / (3 * mu * mu) + 1.0 / 3.0;
}

double radial_integral_r5(double p, double mu) {
  require_zero(p, mu);
  const double mu2 = mu * mu;
  return (8 * p * p * p * p + 20 * p * p * p - 20 * p - 8) / (15 * mu2 * mu2) + (4 * p * p + 10 * p + 4) / (15 * mu2) +
         0.2;
}

double tail_bound(const BallConfig& cfg, double t, double cutoff) {
  // zeros of one order beyond X are more than pi apart, so
  // sum_{j > X} e^{-t j^2} <= e^{-t X^2} / (1 - e^{-2 pi t X})
  const double X = std::sqrt(cutoff / t);
  double bound = 0.0;
  for (int n = 0;; ++n) {
    const double p = cfg.p(n);
    const double x = std::max(p, X);
    const double term = cfg.degeneracy(n) * std::exp(-t * x * x) / (1.0 - std::exp(-2 * std::numbers::pi * t * x));
    bound += term;
    if (p > X && term < 1e-20 * bound) break;
    if (n > 100000) break;
  }
  return bound;
}

double weight_bound(const SmearedF& f) {
  return Weight{f.f0.to_double(), f.f1.to_double(), f.f2.to_double()}.bound();
}

double choose_cutoff(const BallConfig& cfg, double t, const SmearedF& f) {
  const int m = cfg.m;
  // a_0(F) t^{-m/2} = (4 pi t)^{-m/2} d_s Vol(S^{m-1}) int_0^1 F r^{m-1} dr
  const double radial = f.f0.to_double() / m + f.f1.to_double() / (m + 2) + f.f2.to_double() / (m + 4);
  const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
  const double weyl = std::pow(4 * std::numbers::pi * t, -0.5 * m) * sphere * std::abs(radial) * static_cast<double>(cfg.d_s);
  const double w = weight_bound(f);
  for (double cutoff = kDefaultCutoff; cutoff < 200.0; cutoff += 1.0)
    if (w * tail_bound(cfg, t, cutoff) <= 0.5 * kAcceptRatio * weyl) return cutoff;
  throw CutoffInfeasible("choose_cutoff: no cutoff below 200 meets the tail bound");
}

HeatTraceSample heat_trace(const BallConfig& cfg, const ZeroTable& table, double t, double cutoff) {
  return summed_trace(cfg, table, Weight{1.0, 0.0, 0.0}, t, cutoff);
}

HeatTraceSample smeared_heat_trace(const BallConfig& cfg, const ZeroTable& table, const SmearedF& f, double t,
                                   double cutoff) {
  return summed_trace(cfg, table, Weight{f.f0.to_double(), f.f1.to_double(), f.f2.to_double()},
                      t, cutoff);
}

std::vector<double> geometric_grid(double t_lo, double t_hi) {
  if (!(t_lo > 0.0) || !(t_hi >= t_lo)) throw std::domain_error("geometric_grid: need 0 < t_lo <= t_hi");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double t = t_lo * std::pow(2.0, 0.5 * i);
    if (t > t_hi * (1 + 1e-12)) break;
    grid.push_back(t);
  }
  return grid;
}

}  // namespace heatspec::ballspec
