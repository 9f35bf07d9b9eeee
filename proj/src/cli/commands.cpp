#include "heatspec/cli/commands.hpp"

#include "heatspec/ballspec/residue.hpp"
#include "heatspec/invariants/coefficients.hpp"
#include "heatspec/exact/rational_function.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace heatspec::cli {

using ballspec::SmearedF;
using exact::Rational;
using exact::SqrtPiNumber;

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

const char* const kNames[] = {"d0",  "d1",  "d2",  "d3",  "d4",  "d5",  "d6",  "d7",  "d8",  "d9",  "d10",
                              "d11", "d12", "d13", "d14", "d15", "d16", "d17", "d18", "d19", "d20", "d21",
                              "e0",  "e1",  "e2",  "e3",  "e4",  "e5",  "e6",  "e7",  "e8"};

// Float projection of a symbolic entry at a reference dimension, if finite there.
std::optional<double> projection_at(const exact::CoeffExpr& c, int m) {
  try {
    return c.eval(m).to_double();
  } catch (const exact::PoleError&) {
    return std::nullopt;
  }
}

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string relative_detail(double got, double want, double denom, double tol) {
  std::ostringstream os;
  os << "estimate " << format_double(got) << ", exact " << format_double(want) << ", relative error "
     << format_double(std::abs(got - want) / denom) << " <= " << format_double(tol);
  return os.str();
}

}  // namespace

RunReport cmd_lemma2(const Lemma2Options& opt) {
  RunReport rep;
  rep.command = "lemma2";
  rep.inputs["tamper"] = opt.tamper ? nlohmann::ordered_json(*opt.tamper) : nlohmann::ordered_json(nullptr);
  Stopwatch sw;
  invariants::CoefficientTable table = invariants::coefficient_table();
  if (opt.tamper) {
    try {
      table = invariants::tampered_table(*opt.tamper);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--tamper: ") + e.what());
    }
    rep.notes.push_back("table entry " + *opt.tamper + " perturbed by +1 (negative control)");
  }
  const auto result = invariants::lemma2_verify(table);
  for (const auto& r : result.relations) {
    const auto f = projection_at(r.residual, 4);
    rep.values.push_back({"(" + r.label + ") residual", r.residual.to_string(), f, std::nullopt,
                          r.residual.is_zero() ? "" : "float at m = 4"});
  }
  const auto groups = result.group_pass();
  for (int g = 1; g <= 11; ++g) {
    int count = 0;
    for (const auto& r : result.relations) count += r.group == g;
    rep.add_verdict("group " + std::to_string(g), groups[static_cast<std::size_t>(g)],
                    std::to_string(count) + " relation(s), exact in Q(m)[beta]");
  }
  rep.timings.emplace_back("verify", sw.lap());
  return rep;
}

RunReport cmd_coeffs(const CoeffsOptions& opt) {
  RunReport rep;
  rep.command = "coeffs";
  if (opt.symbolic == opt.m.has_value()) throw UsageError("coeffs: give exactly one of --m or --symbolic");
  rep.inputs["m"] = opt.m ? nlohmann::ordered_json(*opt.m) : nlohmann::ordered_json(nullptr);
  rep.inputs["symbolic"] = opt.symbolic;
  if (opt.m && *opt.m < 4) throw UsageError("coeffs: m must be at least 4 (d20 and d21 carry 1/(m-3))");
  Stopwatch sw;
  const auto& table = invariants::coefficient_table();
  for (const char* name : kNames) {
    const auto& c = table.at(name);
    if (opt.symbolic) {
      rep.values.push_back({name, c.to_string(), projection_at(c, 4), std::nullopt, "float at m = 4"});
    } else {
      rep.add_exact(name, c.eval(*opt.m));
    }
  }
  if (opt.m) rep.add_exact("beta", exact::beta_value(*opt.m));
  rep.add_verdict("lemma2 relations", invariants::lemma2_verify(table).all_pass(), "table satisfies all eleven groups");
  rep.timings.emplace_back("evaluate", sw.lap());
  return rep;
}

RunReport cmd_ball(const BallOptions& opt) {
  RunReport rep;
  rep.command = "ball";
  const bool exact_mode = opt.mode == "exact" || opt.mode == "both";
  const bool numeric_mode = opt.mode == "numeric" || opt.mode == "both";
  if (!exact_mode && !numeric_mode) throw UsageError("ball: --mode must be exact, numeric or both");
  if (opt.m % 2 != 0 || opt.m < 4 || opt.m > 10) throw UsageError("ball: m must be even with 4 <= m <= 10");
  if (numeric_mode && opt.m > 6) throw UsageError("ball: numeric mode supports m = 4 and m = 6");
  const SmearedF f{parse_rational(opt.f0, "--f0"), parse_rational(opt.f1, "--f1"), parse_rational(opt.f2, "--f2")};
  rep.inputs["m"] = opt.m;
  rep.inputs["mode"] = opt.mode;
  rep.inputs["f0"] = f.f0.to_string();
  rep.inputs["f1"] = f.f1.to_string();
  rep.inputs["f2"] = f.f2.to_string();
  if (numeric_mode) {
    rep.inputs["t_lo"] = opt.t_lo;
    rep.inputs["t_hi"] = opt.t_hi;
    rep.inputs["k_fit"] = opt.k_fit;
    rep.inputs["tolerances"] = {opt.tol.a0, opt.tol.a1, opt.tol.a2, opt.tol.a3};
  }
  Stopwatch sw;
  const bool smeared = !f.is_constant_one();

  if (exact_mode) {
    const auto pipe = ballspec::residue_pipeline(opt.m);
    bool convention = false;
    const auto listed = ballspec::listed_residues(opt.m, &convention);
    const char* labels[] = {"Res A_-1", "Res A_0", "Res A_1", "Res A_2"};
    for (std::size_t i = 0; i < 4; ++i) {
      rep.add_exact(labels[i], pipe.residues[i]);
      const bool limit = convention && i == 1;
      rep.add_verdict(std::string(labels[i]) + " matches listed formula", pipe.residues[i] == listed[i],
                      limit ? "listed value taken with 1/Gamma(0) = 0" : "exact");
    }
    if (convention) rep.notes.push_back("m = 4: Res A_0 compared under the convention 1/Gamma(0) = 0");
    const auto closed = ballspec::a3_ball_closed_form(opt.m);
    const auto from_table = ballspec::a3_ball_from_table(opt.m);
    rep.add_exact("a3 (residues)", pipe.a3);
    rep.add_exact("a3 (closed form)", closed);
    rep.add_exact("a3 (coefficient table)", from_table);
    rep.add_verdict("Gamma((m-3)/2) sum Res = closed form", pipe.a3 == closed, "exact");
    rep.add_verdict("closed form = coefficient table", closed == from_table, "exact");
    if (smeared) {
      const auto sa = ballspec::smeared_a3_exact(opt.m, f);
      const auto st = ballspec::smeared_a3_from_table(opt.m, f);
      rep.add_exact("a3(F) (residues)", sa);
      rep.add_exact("a3(F) (boundary invariants)", st);
      rep.add_verdict("smeared a3 = boundary invariants", sa == st,
                      "F(1) = " + f.at_boundary().to_string() + ", F_m = " + f.normal_derivative().to_string() +
                          ", F_mm = " + f.second_normal_derivative().to_string());
    }
    rep.timings.emplace_back("exact", sw.lap());
  }

  if (numeric_mode) {
    if (!(opt.t_lo > 0.0) || !(opt.t_hi > opt.t_lo)) throw UsageError("ball: need 0 < t_lo < t_hi");
    const auto exact_a = ballspec::ball_exact_coefficients(opt.m, f);
    ballspec::NumericBallRun run;
    try {
      run = ballspec::numeric_ball(opt.m, f, opt.t_lo, opt.t_hi, opt.k_fit, opt.refresh);
    } catch (const ballspec::CutoffInfeasible& e) {
      throw UsageError(std::string("infeasible t-range: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    rep.notes.push_back("zero table " + run.zeros.path.string() + " (" + ballspec::to_string(run.zeros.status) + ", " +
                        std::to_string(run.zeros.table.total_zeros()) + " zeros)");
    for (const auto& s : run.samples) {
      rep.add_estimate("K(t = " + format_double(s.t) + ")", s.value, s.tail_bound,
                       "error field: truncation bound; cutoff " + format_double(s.cutoff));
    }
    const double tol[4] = {opt.tol.a0, opt.tol.a1, opt.tol.a2, opt.tol.a3};
    const double a0 = std::abs(exact_a[0].to_double());
    for (std::size_t k = 0; k < 4; ++k) {
      const std::string name = "a" + std::to_string(k);
      rep.add_exact(name + " (exact)", exact_a[k]);
      rep.add_estimate(name + " (fit)", run.extract.a_hat[k], run.extract.error[k]);
      const double want = exact_a[k].to_double();
      const double denom = std::max(std::abs(want), a0);
      const double rel = std::abs(run.extract.a_hat[k] - want) / denom;
      rep.add_verdict(name + " within tolerance", rel <= tol[k], relative_detail(run.extract.a_hat[k], want, denom, tol[k]));
    }
    rep.add_verdict("zero table audit", run.zeros.audit.pass,
                    std::to_string(run.zeros.audit.checked_zeros) + " zeros checked");
    rep.values.push_back({"fit condition", std::nullopt, run.extract.condition, std::nullopt,
                          "column-scaled weighted design matrix"});
    rep.values.push_back({"fit rms relative residual", std::nullopt, run.extract.rms_residual, std::nullopt, ""});
    rep.notes.push_back("relative errors use max(|a_k|, |a_0|) as denominator, so a vanishing a_k is measured on the a_0 scale");
    rep.timings.emplace_back("numeric", sw.lap());
  }
  return rep;
}

RunReport cmd_zeros(const ZerosOptions& opt) {
  RunReport rep;
  rep.command = "zeros";
  if (opt.m % 2 != 0 || opt.m < 4) throw UsageError("zeros: m must be even and at least 4");
  if (!(opt.x_max > 0.0) || opt.x_max > 250.0) throw UsageError("zeros: x_max must lie in (0, 250]");
  rep.inputs["m"] = opt.m;
  rep.inputs["xmax"] = opt.x_max;
  rep.inputs["refresh"] = opt.refresh;
  Stopwatch sw;
  ballspec::CachedTable cached;
  try {
    cached = ballspec::load_or_build_zero_table(opt.m, opt.x_max, opt.refresh);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("zeros: cache I/O failed: ") + e.what());
  }
  rep.timings.emplace_back("load_or_build", sw.lap());
  rep.notes.push_back("cache file " + cached.path.string() + ": " + ballspec::to_string(cached.status));
  const bool had_bad_cache = !cached.cached_audit.pass;
  if (had_bad_cache) {
    for (const auto& msg : cached.cached_audit.failures) rep.notes.push_back("cached table: " + msg);
  }
  if (cached.status == ballspec::CacheStatus::invalid) {
    rep.add_verdict("cache audit", false, "cached table failed its audit; rerun with --refresh");
    return rep;
  }
  if (had_bad_cache) rep.add_verdict("corrupted cache detected and rebuilt", true, "stale file replaced");
  const auto& t = cached.table;
  rep.values.push_back({"orders", std::nullopt, static_cast<double>(t.orders.size()), std::nullopt, ""});
  rep.values.push_back({"zeros", std::nullopt, static_cast<double>(t.total_zeros()), std::nullopt, ""});
  if (!t.orders.empty() && !t.orders.front().zeros.empty())
    rep.values.push_back({"j_{p,1} of lowest order", std::nullopt, t.orders.front().zeros.front(), std::nullopt,
                          "p = " + format_double(t.orders.front().p)});
  rep.add_verdict("zero table audit", cached.audit.pass,
                  std::to_string(cached.audit.checked_zeros) + " zeros: ordering, interlacing, residual bounds");
  for (const auto& msg : cached.audit.failures) rep.notes.push_back("audit: " + msg);

  const auto reread = ballspec::read_zero_cache(cached.path);
  bool same = reread.orders.size() == t.orders.size();
  for (std::size_t n = 0; same && n < t.orders.size(); ++n) same = reread.orders[n].zeros == t.orders[n].zeros;
  rep.add_verdict("cache reread identical", same, "bit-for-bit comparison of all zeros");
  rep.timings.emplace_back("verify", sw.lap());
  return rep;
}

}  // namespace heatspec::cli
