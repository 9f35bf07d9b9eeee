#include "heatspec/ballspec/extract.hpp"

#include "heatspec/ballspec/bessel.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace heatspec::ballspec {

CoefficientExtract extract_coefficients(const std::vector<HeatTraceSample>& samples, int m, int k_fit,
                                        double max_condition) {
  if (k_fit < 3) throw std::invalid_argument("extract_coefficients: k_fit must be at least 3");
  const auto n = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index cols = k_fit + 1;
  if (n < cols + 2) throw std::invalid_argument("extract_coefficients: need at least k_fit+3 samples");
  for (const auto& s : samples)
    if (!s.accepted()) throw std::invalid_argument("extract_coefficients: sample at t=" + std::to_string(s.t) +
                                                   " failed the truncation bound");
  const double ratio = samples[1].t / samples[0].t;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(ratio > 1.0) || std::abs(samples[i].t / samples[i - 1].t / ratio - 1.0) > 1e-9)
      throw std::invalid_argument("extract_coefficients: samples must lie on an increasing geometric grid");

  // rows scaled by 1/K: relative residuals; solved in long double because the
  // columns span many orders of magnitude
  using R = long double;
  using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<R, Eigen::Dynamic, 1>;
  Mat A(n, cols);
  Vec b = Vec::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < cols; ++k)
      A(i, k) = std::pow(static_cast<R>(s.t), static_cast<R>(0.5L * (k - m))) / static_cast<R>(s.value);
  }
  const Vec scale = A.colwise().norm().transpose();
  const Mat As = A * scale.cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<Mat> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec& sv = svd.singularValues();
  CoefficientExtract out;
  out.m = m;
  out.k_fit = k_fit;
  out.condition = sv(sv.size() - 1) > 0 ? static_cast<double>(sv(0) / sv(sv.size() - 1)) : INFINITY;
  if (!(out.condition <= max_condition))
    throw IllConditionedFit("extract_coefficients: design matrix condition " + std::to_string(out.condition) +
                                " exceeds " + std::to_string(max_condition),
                            out.condition);
  const Vec x = svd.solve(b).cwiseQuotient(scale);
  const Vec r = A * x - b;
  const R sigma2 = r.squaredNorm() / static_cast<R>(n - cols);
  // covariance of the scaled solution: sigma^2 V S^{-2} V^T
  const Mat vs = svd.matrixV() * sv.cwiseInverse().asDiagonal();
  const Mat cov = sigma2 * vs * vs.transpose();
  for (Eigen::Index k = 0; k < cols; ++k) out.coefficients.push_back(static_cast<double>(x(k)));
  for (Eigen::Index i = 0; i < n; ++i) out.residuals.push_back(static_cast<double>(r(i)));
  out.rms_residual = static_cast<double>(std::sqrt(r.squaredNorm() / n));
  for (int k = 0; k < 4; ++k) {
    out.a_hat[static_cast<std::size_t>(k)] = static_cast<double>(x(k));
    out.error[static_cast<std::size_t>(k)] = static_cast<double>(std::sqrt(std::max<R>(0, cov(k, k))) / scale(k));
  }
  return out;
}

NumericBallRun numeric_ball(int m, const SmearedF& f, double t_lo, double t_hi, int k_fit, bool refresh) {
  const BallConfig cfg(m);
  const std::vector<double> grid = geometric_grid(t_lo, t_hi);
  if (grid.size() < static_cast<std::size_t>(k_fit) + 3)
    throw std::invalid_argument("numeric_ball: t-range holds " + std::to_string(grid.size()) +
                                " grid points, need at least " + std::to_string(k_fit + 3));
  std::vector<double> cutoffs;
  double x_max = 0.0;
  for (double t : grid) {
    cutoffs.push_back(choose_cutoff(cfg, t, f));
    x_max = std::max(x_max, std::sqrt(cutoffs.back() / t));
  }
  x_max = std::ceil(x_max);
  if (x_max > kMaxArgument) throw CutoffInfeasible("numeric_ball: t_lo too small for the Bessel range");
  NumericBallRun run;
  run.zeros = load_or_build_zero_table(m, x_max, refresh);
  if (run.zeros.status == CacheStatus::invalid)
    throw std::runtime_error("numeric_ball: zero cache " + run.zeros.path.string() +
                             " failed its audit; rerun with --refresh");
  if (!run.zeros.audit.pass) throw std::runtime_error("numeric_ball: generated zero table failed its audit");
  for (std::size_t i = 0; i < grid.size(); ++i)
    run.samples.push_back(smeared_heat_trace(cfg, run.zeros.table, f, grid[i], cutoffs[i]));
  run.extract = extract_coefficients(run.samples, m, k_fit);
  return run;
}

}  // namespace heatspec::ballspec
