#pragma once

#include "heatspec/exact/eigen_support.hpp"

#include <vector>

namespace heatspec::invariants {

using exact::CMatrix;
using exact::QMatrix;
using exact::Rational;

/// Pointwise symbol data of D = -(g^{uv} d_u d_v + a^u d_u + b).
struct OperatorSymbol {
  QMatrix g;                        // metric g_{uv}
  std::vector<CMatrix> a;           // a^u
  CMatrix b;
  /// christoffel[u][s][v] = Gamma_{us}^v; empty means flat
  std::vector<std::vector<std::vector<Rational>>> christoffel;
  /// d_omega[v][u] = d_v omega_u; empty means zero
  std::vector<std::vector<CMatrix>> d_omega;
};

struct NormalForm {
  std::vector<CMatrix> omega;  // omega_u
  CMatrix E;
};

/// omega_d = g_{vd}(a^v + g^{us} Gamma_{us}^v)/2 and
/// E = b - g^{vu}(d_v omega_u + omega_v omega_u - omega_s Gamma_{vu}^s).
/// Throws std::domain_error for a singular metric.
NormalForm laplace_normal_form(const OperatorSymbol& symbol);

}  // namespace heatspec::invariants
