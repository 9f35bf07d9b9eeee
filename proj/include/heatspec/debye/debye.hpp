#pragma once

#include "heatspec/exact/poly.hpp"

#include <vector>

namespace heatspec::debye {

using exact::Poly;

/// u_l(t) of the uniform large-order expansion of I_p(pz).
struct DebyePolynomial {
  int order = 0;
  Poly poly{exact::Rational(1), 't'};
};

/// D_q(t), the 1/p^q coefficient of log(1 + sum_l u_l/p^l).
struct CumulantPolynomial {
  int order = 1;
  Poly poly{'t'};
};

DebyePolynomial debye_u0();
/// u_{l+1} = t^2(1-t^2)u_l'/2 + (1/8) int_0^t (1-5s^2) u_l(s) ds
DebyePolynomial debye_next(const DebyePolynomial& u);
/// u_0 ... u_max_l
std::vector<DebyePolynomial> debye_polynomials(int max_l);

/// D_1 ... D_max_q
std::vector<CumulantPolynomial> cumulants(int max_q);

/// Coefficients E_0 ... E_Q of exp(sum_{q<=Q} D_q x^q) truncated at x^Q.
std::vector<Poly> exponentiate(const std::vector<CumulantPolynomial>& d, int max_order);

struct EtaT {
  double eta;
  double t;
};

/// t = 1/sqrt(1+z^2), eta = sqrt(1+z^2) + ln(z/(1+sqrt(1+z^2))); z > 0.
EtaT eta_and_t(double z);

/// Uniform approximation of I_p(z p) keeping u_1 ... u_L.
double bessel_i_uniform(double p, double z, int L);

}  // namespace heatspec::debye
