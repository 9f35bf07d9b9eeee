#pragma once

#include "heatspec/exact/coeff_expr.hpp"
#include "heatspec/invariants/clifford.hpp"
#include "heatspec/invariants/coefficients.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heatspec::invariants {

using exact::SqrtPiNumber;

/// Pointwise boundary data for the heat invariants. Derivative slots and W are
/// optional constants; an empty slot counts as zero.
struct BoundaryGeometryData {
  CliffordRep rep;
  CMatrix psi;    // zeroth order part; psi_hat = gamma_m^{-1} psi
  CMatrix theta;  // Hermitian
  QMatrix L;      // (m-1) x (m-1), symmetric
  Rational tau;
  Rational rho_mm;
  Rational F{1};
  Rational F_m;
  Rational F_mm;
  CMatrix E;  // interior endomorphism, used by a_2 only

  std::optional<CMatrix> psi_hat_m;              // psi_hat_{;m}
  std::vector<CMatrix> psi_hat_colon;            // psi_hat_{:a}, a = 1..m-1
  std::vector<CMatrix> theta_colon;              // Theta_{:a}
  std::vector<std::vector<CMatrix>> W_ab;        // W_ab, (m-1) x (m-1)
  std::vector<CMatrix> W_am;                     // W_am

  int m() const { return rep.m; }
  Eigen::Index dim() const { return rep.dim(); }
  /// All matrices zero, L = 0, F = 1.
  static BoundaryGeometryData zero(const CliffordRep& rep);
  /// Throws std::invalid_argument on inconsistent sizes.
  void validate() const;
};

/// sum c_{k,j} beta^k (sqrt(pi))^j with Gaussian rational c; beta stays symbolic.
class DensityValue {
 public:
  using Key = std::pair<int, int>;  // (beta power, sqrt(pi) power)

  DensityValue() = default;
  explicit DensityValue(int m) : m_(m) {}

  int m() const { return m_; }
  const std::map<Key, GaussRational>& terms() const { return terms_; }
  GaussRational coeff(int beta_power, int sqrt_pi_power = 0) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;

  void add(const Key& key, const GaussRational& c);
  /// Adds coeff(m) * value, with coeff's beta kept symbolic.
  void add(const CoeffExpr& coeff, const GaussRational& value, int sqrt_pi_power = 0);

  /// Substitutes beta(m); throws if an imaginary part survives.
  SqrtPiNumber value() const;
  std::string to_string() const;

  DensityValue& operator+=(const DensityValue& o);
  DensityValue& operator-=(const DensityValue& o);
  friend DensityValue operator+(DensityValue a, const DensityValue& b) { return a += b; }
  friend DensityValue operator-(DensityValue a, const DensityValue& b) { return a -= b; }
  friend bool operator==(const DensityValue& a, const DensityValue& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  int m_ = 0;
  std::map<Key, GaussRational> terms_;
};

DensityValue a0_density(const BoundaryGeometryData& data);
DensityValue a1_density(const BoundaryGeometryData& data);
DensityValue a2_interior_density(const BoundaryGeometryData& data);
DensityValue a2_boundary_density(const BoundaryGeometryData& data);
/// Full boundary integrand of a_3 without the (4 pi)^{-(m-1)/2} factor.
DensityValue a3_density(const BoundaryGeometryData& data, const CoefficientTable& table = coefficient_table());

/// psi -> psi^*, Theta -> -gamma_m Theta gamma_m^{-1} + L_aa.
BoundaryGeometryData adjoint_data(const BoundaryGeometryData& data);

}  // namespace heatspec::invariants
