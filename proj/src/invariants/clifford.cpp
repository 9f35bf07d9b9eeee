#include "heatspec/invariants/clifford.hpp"

#include <stdexcept>

namespace heatspec::invariants {

using exact::identity;
using exact::zeros;

namespace {

const GaussRational I_UNIT = GaussRational::i();

CMatrix block(const CMatrix& upper_right, const CMatrix& lower_left) {
  const Eigen::Index n = upper_right.rows();
  CMatrix r = zeros(2 * n);
  r.topRightCorner(n, n) = upper_right;
  r.bottomLeftCorner(n, n) = lower_left;
  return r;
}

CMatrix scaled(const CMatrix& a, const GaussRational& s) {
  return a.unaryExpr([&s](const GaussRational& z) { return z * s; });
}

}  // namespace

CMatrix CliffordRep::tangential(int a) const { return normal_inverse() * gammas.at(a); }

std::vector<CMatrix> clifford_generators(int n) {
  if (n < 1) throw std::invalid_argument("clifford_generators: n must be positive");
  if (n == 1) {
    CMatrix g(1, 1);
    g(0, 0) = I_UNIT;
    return {g};
  }
  if (n % 2 == 0) {
    const auto prev = clifford_generators(n - 1);
    std::vector<CMatrix> out;
    for (const auto& g : prev) out.push_back(block(scaled(g, I_UNIT), scaled(g, -I_UNIT)));
    const CMatrix id = identity(prev.front().rows());
    out.push_back(block(scaled(id, I_UNIT), scaled(id, I_UNIT)));
    return out;
  }
  // odd n: the even rep for n-1 plus the (suitably phased) volume element
  auto out = clifford_generators(n - 1);
  CMatrix omega = identity(out.front().rows());
  for (const auto& g : out) omega = omega * g;
  if (((n - 1) / 2) % 2 == 0) omega = scaled(omega, I_UNIT);
  out.push_back(omega);
  return out;
}

CliffordRep clifford_rep(int m) {
  if (m < 4 || m % 2 != 0) throw std::domain_error("clifford_rep: m must be even and >= 4");
  return {m, clifford_generators(m)};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = scaled(b, a(i, j));
  return r;
}

CliffordRep tensor_with(const CliffordRep& rep, Eigen::Index k) {
  CliffordRep out{rep.m, {}};
  const CMatrix id = identity(k);
  for (const auto& g : rep.gammas) out.gammas.push_back(kron(g, id));
  return out;
}

CMatrix tangential_divergence_residual(const CliffordRep& rep, const QMatrix& L) {
  const int n = rep.m - 1;
  if (L.rows() != n || L.cols() != n) throw std::invalid_argument("tangential_divergence_residual: L has wrong size");
  CMatrix r = zeros(rep.dim());
  Rational trace_l;
  for (int a = 0; a < n; ++a) {
    trace_l += L(a, a);
    for (int b = 0; b < n; ++b) r += scaled(rep.gammas[b] * rep.gammas[a], GaussRational(L(a, b)));
  }
  r -= scaled(rep.normal() * rep.normal(), GaussRational(trace_l));
  return r;
}

}  // namespace heatspec::invariants
