#pragma once

#include "heatspec/exact/eigen_support.hpp"

#include <vector>

namespace heatspec::invariants {

using exact::CMatrix;
using exact::GaussRational;
using exact::QMatrix;
using exact::Rational;

/// Anti-Hermitian gamma matrices with gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij.
struct CliffordRep {
  int m = 0;
  std::vector<CMatrix> gammas;  // gammas[i] is gamma_{i+1}

  Eigen::Index dim() const { return gammas.empty() ? 0 : gammas.front().rows(); }
  const CMatrix& normal() const { return gammas.back(); }
  /// gamma_m^{-1} = -gamma_m
  CMatrix normal_inverse() const { return -gammas.back(); }
  /// gamma_a^T = gamma_m^{-1} gamma_a, a = 1..m-1 (0-based index a-1)
  CMatrix tangential(int a) const;
};

/// n generators of size 2^{floor(n/2)} with entries in {0, +-1, +-i}.
std::vector<CMatrix> clifford_generators(int n);
/// Even m >= 4 only.
CliffordRep clifford_rep(int m);
/// gamma -> gamma (x) I_k, for an auxiliary factor of dimension k.
CliffordRep tensor_with(const CliffordRep& rep, Eigen::Index k);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// L_ab gamma_b gamma_a - L_aa gamma_m gamma_m; vanishes for symmetric L.
CMatrix tangential_divergence_residual(const CliffordRep& rep, const QMatrix& L);

}  // namespace heatspec::invariants
