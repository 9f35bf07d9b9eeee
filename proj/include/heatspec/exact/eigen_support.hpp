#pragma once

#include "heatspec/exact/rational.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<heatspec::exact::Rational> : GenericNumTraits<heatspec::exact::Rational> {
  using Real = heatspec::exact::Rational;
  using NonInteger = heatspec::exact::Rational;
  using Nested = heatspec::exact::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static constexpr int digits10() { return 0; }
};

// IsComplex stays 0 so Eigen never reaches for std::complex machinery;
// use heatspec::exact::dagger() for the conjugate transpose.
template <>
struct NumTraits<heatspec::exact::GaussRational> : GenericNumTraits<heatspec::exact::GaussRational> {
  using Real = heatspec::exact::GaussRational;
  using NonInteger = heatspec::exact::GaussRational;
  using Nested = heatspec::exact::GaussRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

namespace heatspec::exact {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using CMatrix = Eigen::Matrix<GaussRational, Eigen::Dynamic, Eigen::Dynamic>;

inline CMatrix dagger(const CMatrix& a) {
  return a.transpose().unaryExpr([](const GaussRational& z) { return conj(z); });
}

inline CMatrix identity(Eigen::Index n) {
  CMatrix r = CMatrix::Constant(n, n, GaussRational(0));
  for (Eigen::Index i = 0; i < n; ++i) r(i, i) = GaussRational(1);
  return r;
}

inline CMatrix zeros(Eigen::Index n) { return CMatrix::Constant(n, n, GaussRational(0)); }

inline bool is_zero(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a.data()[i].is_zero()) return false;
  return true;
}

inline GaussRational trace(const CMatrix& a) {
  GaussRational s;
  for (Eigen::Index i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& a);

}  // namespace heatspec::exact
