#pragma once

#include "heatspec/exact/sqrt_pi.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heatspec::cli {

struct ReportValue {
  std::string name;
  std::optional<std::string> exact;  // canonical rendering; empty for pure estimates
  std::optional<double> value;       // float projection or estimate
  std::optional<double> error;       // one-sigma fit error for estimates
  std::string note;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Result of one command: inputs, exact values with float projections,
/// verdicts and timings.
struct RunReport {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<ReportValue> values;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings;  // seconds

  void add_exact(std::string name, const exact::SqrtPiNumber& v, std::string note = {});
  void add_estimate(std::string name, double v, double error, std::string note = {});
  void add_verdict(std::string name, bool pass, std::string detail = {});

  /// True iff there is at least one verdict and all pass.
  bool pass() const;
  nlohmann::ordered_json to_json(bool with_timings = true) const;
  std::string to_text(bool with_timings = true) const;
};

/// Shortest round-trip decimal for a double.
std::string format_double(double x);

}  // namespace heatspec::cli
