#pragma once

#include "heatspec/ballspec/trace.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace heatspec::ballspec {

inline constexpr int kDefaultFitOrder = 5;  // a_0..a_3 plus two guard terms
inline constexpr double kDefaultTLo = 1e-3;
inline constexpr double kDefaultTHi = 1e-3 * 11.313708498984761;  // t_lo * 2^{7/2}: eight samples
inline constexpr double kMaxCondition = 1e12;

class IllConditionedFit : public std::runtime_error {
 public:
  IllConditionedFit(const std::string& what, double condition) : std::runtime_error(what), condition(condition) {}
  double condition;
};

struct CoefficientExtract {
  int m = 4;
  int k_fit = kDefaultFitOrder;
  std::array<double, 4> a_hat{};
  std::array<double, 4> error{};      // one standard deviation from the fit covariance
  std::vector<double> coefficients;   // a_0..a_{k_fit}
  std::vector<double> residuals;      // (fit - K) / K per sample
  double condition = 0.0;             // of the column-scaled weighted design matrix
  double rms_residual = 0.0;
};

/// Weighted least squares of K(t) against t^{(k-m)/2}, k = 0..k_fit. Needs at
/// least k_fit+3 accepted samples on a geometric grid; throws IllConditionedFit
/// above max_condition.
CoefficientExtract extract_coefficients(const std::vector<HeatTraceSample>& samples, int m,
                                        int k_fit = kDefaultFitOrder, double max_condition = kMaxCondition);

struct NumericBallRun {
  std::vector<HeatTraceSample> samples;
  CachedTable zeros;
  CoefficientExtract extract;
};

/// Zero table (cached), per-sample cutoffs, traces and the fit. F = 1 gives the
/// plain trace.
NumericBallRun numeric_ball(int m, const SmearedF& f, double t_lo = kDefaultTLo, double t_hi = kDefaultTHi,
                            int k_fit = kDefaultFitOrder, bool refresh = false);

}  // namespace heatspec::ballspec
