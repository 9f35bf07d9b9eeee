#include "heatspec/cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace heatspec::cli {

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void RunReport::add_exact(std::string name, const exact::SqrtPiNumber& v, std::string note) {
  values.push_back({std::move(name), v.to_string(), v.to_double(), std::nullopt, std::move(note)});
}

void RunReport::add_estimate(std::string name, double v, double error, std::string note) {
  values.push_back({std::move(name), std::nullopt, v, error, std::move(note)});
}

void RunReport::add_verdict(std::string name, bool pass, std::string detail) {
  verdicts.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::pass() const {
  return !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

nlohmann::ordered_json RunReport::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  auto& vals = j["values"] = nlohmann::ordered_json::array();
  for (const auto& v : values) {
    nlohmann::ordered_json e;
    e["name"] = v.name;
    e["exact"] = v.exact ? nlohmann::ordered_json(*v.exact) : nlohmann::ordered_json(nullptr);
    e["float"] = v.value ? nlohmann::ordered_json(*v.value) : nlohmann::ordered_json(nullptr);
    if (v.error) e["error"] = *v.error;
    if (!v.note.empty()) e["note"] = v.note;
    vals.push_back(std::move(e));
  }
  auto& ver = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) ver.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  j["notes"] = notes;
  if (with_timings) {
    auto& t = j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [k, s] : timings) t[k] = s;
  }
  j["pass"] = pass();
  return j;
}

std::string RunReport::to_text(bool with_timings) const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  if (!inputs.empty()) {
    os << "inputs:";
    for (const auto& [k, v] : inputs.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
  }
  if (!values.empty()) {
    os << "values:\n";
    std::size_t w = 0;
    for (const auto& v : values) w = std::max(w, v.name.size());
    for (const auto& v : values) {
      os << "  " << v.name << std::string(w - v.name.size(), ' ') << "  ";
      if (v.exact) os << *v.exact;
      if (v.value) os << (v.exact ? "  ~ " : "") << format_double(*v.value);
      if (v.error) os << " +- " << format_double(*v.error);
      if (!v.note.empty()) os << "  [" << v.note << "]";
      os << "\n";
    }
  }
  if (!verdicts.empty()) {
    os << "verdicts:\n";
    for (const auto& v : verdicts) {
      os << "  " << (v.pass ? "PASS" : "FAIL") << "  " << v.name;
      if (!v.detail.empty()) os << "  (" << v.detail << ")";
      os << "\n";
    }
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  if (with_timings && !timings.empty()) {
    os << "timings:";
    for (const auto& [k, s] : timings) os << " " << k << "=" << format_double(std::round(s * 1e4) / 1e4) << "s";
    os << "\n";
  }
  os << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace heatspec::cli
