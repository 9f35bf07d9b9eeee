#pragma once

#include "heatspec/ballspec/extract.hpp"
#include "heatspec/cli/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace heatspec::cli {

/// Invalid command-line input; reported with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Lemma2Options {
  std::optional<std::string> tamper;  // table entry to perturb, e.g. "e0"
};

struct CoeffsOptions {
  std::optional<int> m;
  bool symbolic = false;
};

struct Tolerances {
  double a0 = 1e-6;
  double a1 = 1e-4;
  double a2 = 1e-3;
  double a3 = 5e-2;
};

struct BallOptions {
  int m = 4;
  std::string mode = "exact";  // exact | numeric | both
  std::string f0 = "1", f1 = "0", f2 = "0";
  double t_lo = ballspec::kDefaultTLo;
  double t_hi = ballspec::kDefaultTHi;
  int k_fit = ballspec::kDefaultFitOrder;
  Tolerances tol;
  bool refresh = false;
};

struct ZerosOptions {
  int m = 4;
  double x_max = 100.0;
  bool refresh = false;
};

RunReport cmd_lemma2(const Lemma2Options& opt);
RunReport cmd_coeffs(const CoeffsOptions& opt);
RunReport cmd_ball(const BallOptions& opt);
RunReport cmd_zeros(const ZerosOptions& opt);

}  // namespace heatspec::cli
