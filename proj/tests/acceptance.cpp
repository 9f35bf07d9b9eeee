// One PASS/FAIL line per acceptance criterion. Exit status is 0 iff every
// criterion passes, or, with --expect-fail N..., iff exactly the listed ones fail.

#include "heatspec/ballspec/bessel.hpp"
#include "heatspec/ballspec/extract.hpp"
#include "heatspec/ballspec/residue.hpp"
#include "heatspec/barnes/barnes.hpp"
#include "heatspec/debye/debye.hpp"
#include "heatspec/invariants/clifford.hpp"
#include "heatspec/invariants/coefficients.hpp"
#include "heatspec/invariants/density.hpp"
#include "support/random_data.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace heatspec;
using exact::CMatrix;
using exact::GaussRational;
using exact::Poly;
using exact::Rational;
using exact::SqrtPiNumber;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome relation_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = invariants::lemma2_verify();
  const double dt = seconds_since(t0);
  const auto groups = rep.group_pass();
  int passed = 0;
  for (int g = 1; g <= 11; ++g) passed += groups[static_cast<std::size_t>(g)];
  return {passed == 11 && dt < 1.0, std::to_string(passed) + "/11 groups exact, " + fmt(dt) + " s"};
}

Outcome cumulants() {
  const auto d = debye::cumulants(2);
  const Poly t = Poly::variable('t');
  const Poly d1 = Rational(1, 8) * t + Rational(-5, 24) * t * t * t;
  const Poly t2 = t * t;
  const Poly d2 = Rational(1, 16) * t2 + Rational(-3, 8) * t2 * t2 + Rational(5, 16) * t2 * t2 * t2;
  const bool ok = d[0].poly == d1 && d[1].poly == d2;
  return {ok, "D1 = " + d[0].poly.to_string() + ", D2 = " + d[1].poly.to_string()};
}

Outcome barnes_residues() {
  const Poly a = Poly::variable('a');
  auto c = [](const Rational& x) { return Poly(x, 'a'); };
  int printed_ok = 0, printed_total = 0;
  bool corrected_ok = true;
  std::string first_bad;
  for (int d = 4; d <= 12; ++d) {
    const Rational D(d);
    const Poly listed[4] = {
        c(Rational(1) / exact::factorial(d - 1)),
        (c(D) - c(2) * a) * (Rational(1) / (Rational(2) * exact::factorial(d - 2))),
        (c(12) * a * a - c(D) - c(D * 12) * a + c(D * D * 3)) * (Rational(1) / (Rational(24) * exact::factorial(d - 3))),
        // as printed: the linear term reads 2a
        (c(-8) * a * a * a + c(D * 12) * a * a + c(2) * a - c(D * D * 6) * a - c(D * D) + c(D * D * D)) *
            (Rational(1) / (Rational(48) * exact::factorial(d - 4)))};
    for (int k = 0; k < 4; ++k) {
      ++printed_total;
      const Poly got = barnes::barnes_residue(d - k, d).value;
      if (got == listed[k]) {
        ++printed_ok;
      } else if (first_bad.empty()) {
        first_bad = "z=d-" + std::to_string(k) + ", d=" + std::to_string(d) + ": computed " + got.to_string();
      }
    }
    const Poly corrected = (c(-8) * a * a * a + c(D * 12) * a * a + c(D * 2) * a - c(D * D * 6) * a - c(D * D) + c(D * D * D)) *
                           (Rational(1) / (Rational(48) * exact::factorial(d - 4)));
    corrected_ok = corrected_ok && barnes::barnes_residue(d - 3, d).value == corrected;
  }
  std::string detail = std::to_string(printed_ok) + "/" + std::to_string(printed_total) + " printed formulas match";
  if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
  detail += corrected_ok ? "; z=d-3 with linear term 2ad matches for all d" : "; corrected z=d-3 form also differs";
  return {printed_ok == printed_total, detail};
}

Outcome residue_pipeline() {
  int listed_ok = 0, sums_ok = 0;
  for (int m : {6, 8, 10}) {
    const auto pipe = ballspec::residue_pipeline(m);
    const auto listed = ballspec::listed_residues(m);
    listed_ok += pipe.residues == listed;
  }
  for (int m : {4, 6, 8, 10}) sums_ok += ballspec::residue_pipeline(m).a3 == ballspec::a3_ball_closed_form(m);
  return {listed_ok == 3 && sums_ok == 4,
          "listed residues " + std::to_string(listed_ok) + "/3, Gamma-weighted sums " + std::to_string(sums_ok) + "/4"};
}

Outcome table_identity() {
  int ok = 0;
  for (int m : {4, 6, 8, 10}) ok += ballspec::a3_ball_closed_form(m) == ballspec::a3_ball_from_table(m);
  return {ok == 4, std::to_string(ok) + "/4 dimensions, exact"};
}

Outcome numeric_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = ballspec::numeric_ball(4, ballspec::SmearedF{}, ballspec::kDefaultTLo, ballspec::kDefaultTHi,
                                          ballspec::kDefaultFitOrder, true);
  const double dt = seconds_since(t0);
  const auto exact = ballspec::ball_exact_coefficients(4);
  const double tol[4] = {1e-6, 1e-4, 1e-3, 5e-2};
  const double a0 = exact[0].to_double();
  bool ok = dt <= 300.0;
  std::ostringstream os;
  for (std::size_t k = 0; k < 4; ++k) {
    const double want = exact[k].to_double();
    const double rel = std::abs(run.extract.a_hat[k] - want) / std::max(std::abs(want), a0);
    ok = ok && rel <= tol[k];
    os << "a" << k << " " << fmt(rel) << (k < 3 ? ", " : "");
  }
  os << "; " << fmt(dt) << " s";
  return {ok, os.str()};
}

Outcome smeared() {
  const ballspec::SmearedF cases[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  int ok = 0;
  for (const auto& f : cases) ok += ballspec::smeared_a3_exact(4, f) == ballspec::smeared_a3_from_table(4, f);
  return {ok == 4, std::to_string(ok) + "/4 smearing functions, exact"};
}

double radial_quadrature(int k, double p, double mu) {
  const double norm = boost::math::cyl_bessel_j(p + 1, mu);
  auto f = [&](double r) {
    const double a = boost::math::cyl_bessel_j(p, mu * r), b = boost::math::cyl_bessel_j(p + 1, mu * r);
    return std::pow(r, k) * (a * a + b * b);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 15, 1e-14) / (norm * norm);
}

Outcome radial_integrals() {
  double worst = 0.0;
  for (int p = 1; p <= 10; ++p) {
    const auto z = ballspec::bessel_zeros(p, 40.0);
    for (std::size_t k = 0; k < 3; ++k) {
      worst = std::max(worst, std::abs(ballspec::radial_integral_r3(p, z[k]) - radial_quadrature(3, p, z[k])));
      worst = std::max(worst, std::abs(ballspec::radial_integral_r5(p, z[k]) - radial_quadrature(5, p, z[k])));
    }
  }
  return {worst <= 1e-10, "max |closed form - quadrature| = " + fmt(worst)};
}

Outcome index_symmetry() {
  std::mt19937 rng(1729);
  int ok = 0, total = 0;
  for (int m : {4, 6}) {
    const auto rep = invariants::clifford_rep(m);
    for (int i = 0; i < 100; ++i) {
      const auto data = testsupport::random_boundary_data(rng, rep);
      ++total;
      ok += invariants::a3_density(data) == invariants::a3_density(invariants::adjoint_data(data));
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " datasets, exact"};
}

CMatrix scalar(Eigen::Index n, const GaussRational& c) { return exact::identity(n) * c; }

Outcome clifford_suite() {
  bool rel = true, relt = true, divergence = true, wtrace = true, theta = true;
  std::mt19937 rng(99);
  for (int m : {4, 6}) {
    const auto rep = invariants::clifford_rep(m);
    const Eigen::Index n = rep.dim();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        rel = rel && exact::dagger(rep.gammas[i]) * rep.gammas[j] + exact::dagger(rep.gammas[j]) * rep.gammas[i] ==
                         scalar(n, GaussRational(i == j ? 2 : 0));
    for (int a = 0; a < m - 1; ++a)
      for (int b = 0; b < m - 1; ++b) {
        const CMatrix ga = rep.tangential(a), gb = rep.tangential(b);
        relt = relt && ga * gb + gb * ga == scalar(n, GaussRational(a == b ? -2 : 0));
      }
    for (int k = 0; k < 5; ++k)
      divergence = divergence &&
                   exact::is_zero(invariants::tangential_divergence_residual(rep, testsupport::random_symmetric(rng, m - 1)));

    // W = I (x) w commutes with the gammas; both traces vanish
    const auto big = invariants::tensor_with(rep, 2);
    const int nt = m - 1;
    for (int a = 0; a < nt; ++a) {
      const CMatrix wam = invariants::kron(exact::identity(n), testsupport::random_matrix(rng, 2));
      wtrace = wtrace && exact::trace(wam * big.tangential(a)).is_zero();
      for (int b = a + 1; b < nt; ++b) {
        const CMatrix w = invariants::kron(exact::identity(n), testsupport::random_matrix(rng, 2));
        GaussRational s = exact::trace(w * big.tangential(a) * big.tangential(b));
        s -= exact::trace(w * big.tangential(b) * big.tangential(a));
        wtrace = wtrace && s.is_zero();
      }
    }

    auto data = invariants::BoundaryGeometryData::zero(rep);
    data.L = exact::QMatrix::Identity(nt, nt);
    const auto plain = invariants::a3_density(data);
    for (int c : {1, -3, 7}) {
      data.theta = scalar(n, GaussRational(Rational(c, 2)));
      theta = theta && invariants::a3_density(data) == plain;
    }
    auto only_theta = invariants::BoundaryGeometryData::zero(rep);
    only_theta.theta = scalar(n, GaussRational(5));
    theta = theta && invariants::a3_density(only_theta).is_zero();
  }
  auto mark = [](bool b) { return b ? "ok" : "FAILED"; };
  std::string detail = std::string("Clifford ") + mark(rel) + ", tangential " + mark(relt) + ", divergence identity " +
                       mark(divergence) + ", W traces " + mark(wtrace) + ", constant Theta " + mark(theta);
  return {rel && relt && divergence && wtrace && theta, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail") {
      while (i + 1 < argc && std::isdigit(static_cast<unsigned char>(argv[i + 1][0]))) expected_failures.insert(std::atoi(argv[++i]));
    }
  }
  if (!std::getenv("HEATSPEC_CACHE_DIR")) {
    const auto dir = std::filesystem::temp_directory_path() / "heatspec-acceptance-cache";
    setenv("HEATSPEC_CACHE_DIR", dir.c_str(), 1);
  }

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exact relation suite", relation_suite},
      {"cumulants D1, D2", cumulants},
      {"Barnes residues, 4 <= d <= 12", barnes_residues},
      {"residue pipeline", residue_pipeline},
      {"table identity", table_identity},
      {"numeric spectral oracle, m = 4", numeric_oracle},
      {"smeared consistency, m = 4", smeared},
      {"radial integrals vs quadrature", radial_integrals},
      {"index symmetry, 100 datasets per m", index_symmetry},
      {"structural Clifford suite", clifford_suite},
  };
  std::set<int> failed;
  int idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) failed.insert(idx);
    std::printf("%2d %s  %s  (%s)\n", idx, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/10 criteria pass\n", 10 - failed.size());
  if (!expected_failures.empty()) {
    std::printf("expected failures:");
    for (int k : expected_failures) std::printf(" %d", k);
    std::printf(" -> %s\n", failed == expected_failures ? "as expected" : "MISMATCH");
    return failed == expected_failures ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
