#pragma once

#include "heatspec/ballspec/zeros.hpp"
#include "heatspec/exact/rational.hpp"

#include <stdexcept>
#include <vector>

namespace heatspec::ballspec {

inline constexpr double kDefaultCutoff = 36.0;
inline constexpr double kAcceptRatio = 1e-15;

class CutoffInfeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct HeatTraceSample {
  double t = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
  double cutoff = kDefaultCutoff;  // Lambda, with mu_max = sqrt(Lambda / t)
  bool accepted() const { return value > 0.0 && tail_bound <= kAcceptRatio * std::abs(value); }
};

/// F(r) = f0 + f1 r^2 + f2 r^4.
struct SmearedF {
  exact::Rational f0{1}, f1{0}, f2{0};

  exact::Rational at_boundary() const { return f0 + f1 + f2; }
  /// F_{;m} = -F'(1), the inward normal derivative.
  exact::Rational normal_derivative() const { return -(exact::Rational(2) * f1 + exact::Rational(4) * f2); }
  exact::Rational second_normal_derivative() const { return exact::Rational(2) * f1 + exact::Rational(12) * f2; }
  bool is_constant_one() const { return f0 == exact::Rational(1) && f1.is_zero() && f2.is_zero(); }
};

/// int_0^1 r^3 [Jb_p^2 + Jb_{p+1}^2](mu r) dr with Jb = J / J_{p+1}(mu), for J_p(mu) = 0.
double radial_integral_r3(double p, double mu);
/// Same with r^5.
double radial_integral_r5(double p, double mu);

/// K(t) = 4 sum_n d_n sum_k exp(-t j_{p(n),k}^2) over zeros up to sqrt(Lambda/t).
HeatTraceSample heat_trace(const BallConfig& cfg, const ZeroTable& table, double t, double cutoff = kDefaultCutoff);
/// Each eigenvalue weighted by int_0^1 F(r) r [Jb_p^2 + Jb_{p+1}^2] dr.
HeatTraceSample smeared_heat_trace(const BallConfig& cfg, const ZeroTable& table, const SmearedF& f, double t,
                                   double cutoff = kDefaultCutoff);

/// Upper bound on the omitted part of the trace for eigenvalues above Lambda/t,
/// per unit weight.
double tail_bound(const BallConfig& cfg, double t, double cutoff);

/// Bound on |eigenvalue weight| for the smeared trace; 1 for F = 1.
double weight_bound(const SmearedF& f);

/// Smallest cutoff >= 36 (step 1) whose weighted tail bound is below half the
/// acceptance ratio times the leading Weyl term a_0(F) t^{-m/2}.
double choose_cutoff(const BallConfig& cfg, double t, const SmearedF& f = SmearedF{});

/// Geometric grid t_lo * 2^{i/2} up to t_hi.
std::vector<double> geometric_grid(double t_lo, double t_hi);

}  // namespace heatspec::ballspec
