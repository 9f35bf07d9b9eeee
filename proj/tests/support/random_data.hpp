#pragma once

#include "heatspec/invariants/density.hpp"

#include <random>

namespace testsupport {

using heatspec::exact::CMatrix;
using heatspec::exact::GaussRational;
using heatspec::exact::QMatrix;
using heatspec::exact::Rational;
using heatspec::invariants::BoundaryGeometryData;
using heatspec::invariants::CliffordRep;

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

inline GaussRational small_gauss(std::mt19937& rng) { return {small_rational(rng), small_rational(rng)}; }

inline CMatrix random_matrix(std::mt19937& rng, Eigen::Index n) {
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = small_gauss(rng);
  return a;
}

inline CMatrix random_hermitian(std::mt19937& rng, Eigen::Index n) {
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = GaussRational(small_rational(rng));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = small_gauss(rng);
      a(j, i) = conj(a(i, j));
    }
  }
  return a;
}

inline QMatrix random_symmetric(std::mt19937& rng, Eigen::Index n) {
  QMatrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) l(i, j) = l(j, i) = small_rational(rng);
  return l;
}

/// Random psi, Hermitian Theta, symmetric L; tau = rho_mm = 0, F = 1.
inline BoundaryGeometryData random_boundary_data(std::mt19937& rng, const CliffordRep& rep) {
  auto d = BoundaryGeometryData::zero(rep);
  d.psi = random_matrix(rng, rep.dim());
  d.theta = random_hermitian(rng, rep.dim());
  d.L = random_symmetric(rng, rep.m - 1);
  return d;
}

}  // namespace testsupport
