#pragma once

#include <vector>

namespace heatspec::ballspec {

inline constexpr double kMaxOrder = 250.0;
inline constexpr double kMaxArgument = 600.0;

struct BesselValue {
  double j;   // J_nu(x)
  double jp;  // J_nu'(x)
};

/// J_nu(x) and its derivative for 0 <= nu <= 250, 0 <= x <= 600.
/// Power series when x <= 2 sqrt(nu+1), Steed's continued fractions otherwise.
BesselValue bessel_j_with_derivative(double nu, double x);
double bessel_j(double nu, double x);

/// Positive zeros of J_p in (0, x_max], ascending.
std::vector<double> bessel_zeros(double p, double x_max);

}  // namespace heatspec::ballspec
