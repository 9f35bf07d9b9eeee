#include "heatspec/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace heatspec::cli;

namespace {

int emit(const RunReport& rep, bool json, bool timings) {
  if (json) std::cout << rep.to_json(timings).dump(2) << "\n";
  else std::cout << rep.to_text(timings);
  return rep.pass() ? 0 : 1;
}

int fail(const std::string& command, const std::string& message, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["error"] = message;
    j["pass"] = false;
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "heatspec " << command << ": " << message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat-trace coefficient a_3 under spectral boundary conditions: exact table and ball oracle"};
  app.require_subcommand(1);
  bool json = false, no_timings = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_flag("--no-timings", no_timings, "Omit timings so reports are byte-for-byte reproducible");

  Lemma2Options lemma2;
  auto* c_lemma2 = app.add_subcommand("lemma2", "Verify the eleven relation groups on the coefficient table");
  c_lemma2->add_option("--tamper", lemma2.tamper, "Perturb one table entry by +1, e.g. e0 (negative control)");

  CoeffsOptions coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Render the coefficient table");
  c_coeffs->add_option("--m", coeffs.m, "Evaluate at dimension m >= 4");
  c_coeffs->add_flag("--symbolic", coeffs.symbolic, "Render as elements of Q(m)[beta]");

  BallOptions ball;
  auto* c_ball = app.add_subcommand("ball", "Exact residues and numeric heat-trace oracle on the unit ball");
  c_ball->add_option("--m", ball.m, "Even dimension (4..10 exact, 4 or 6 numeric)")->capture_default_str();
  c_ball->add_option("--mode", ball.mode, "exact, numeric or both")->capture_default_str();
  c_ball->add_option("--f0", ball.f0, "Smearing F(r) = f0 + f1 r^2 + f2 r^4 (rational or decimal)")->capture_default_str();
  c_ball->add_option("--f1", ball.f1)->capture_default_str();
  c_ball->add_option("--f2", ball.f2)->capture_default_str();
  c_ball->add_option("--t-lo", ball.t_lo, "Smallest t of the sqrt(2)-ratio grid")->capture_default_str();
  c_ball->add_option("--t-hi", ball.t_hi, "Largest t of the grid")->capture_default_str();
  c_ball->add_option("--k-fit", ball.k_fit, "Highest power fitted (a_0..a_k)")->capture_default_str();
  c_ball->add_option("--tol-a0", ball.tol.a0, "Relative tolerance on a_0")->capture_default_str();
  c_ball->add_option("--tol-a1", ball.tol.a1, "Relative tolerance on a_1")->capture_default_str();
  c_ball->add_option("--tol-a2", ball.tol.a2, "Relative tolerance on a_2")->capture_default_str();
  c_ball->add_option("--tol-a3", ball.tol.a3, "Relative tolerance on a_3")->capture_default_str();
  c_ball->add_flag("--refresh", ball.refresh, "Rebuild the zero cache");

  ZerosOptions zeros;
  auto* c_zeros = app.add_subcommand("zeros", "Build, audit and cache Bessel zeros");
  c_zeros->add_option("--m", zeros.m, "Even dimension")->capture_default_str();
  c_zeros->add_option("--xmax", zeros.x_max, "Largest zero kept")->capture_default_str();
  c_zeros->add_flag("--refresh", zeros.refresh, "Rebuild even if a cache file exists");

  CLI11_PARSE(app, argc, argv);

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    RunReport rep;
    if (name == "lemma2") rep = cmd_lemma2(lemma2);
    else if (name == "coeffs") rep = cmd_coeffs(coeffs);
    else if (name == "ball") rep = cmd_ball(ball);
    else rep = cmd_zeros(zeros);
    return emit(rep, json, !no_timings);
  } catch (const std::exception& e) {
    return fail(name, e.what(), json);
  }
}
