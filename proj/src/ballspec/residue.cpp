#include "heatspec/ballspec/residue.hpp"

#include "heatspec/barnes/barnes.hpp"
#include "heatspec/debye/debye.hpp"
#include "heatspec/invariants/clifford.hpp"
#include "heatspec/invariants/density.hpp"

#include <optional>

namespace heatspec::ballspec {

using exact::gamma_at;

namespace {

// Leading Laurent data c (s - s0)^order; an empty coefficient is a finite
// value that is not available in closed form.
struct Leading {
  int order = 0;
  std::optional<SqrtPiNumber> coeff;
};

Leading gamma_leading(const Rational& x0, int power) {
  if (x0.is_integer() && x0.sign() <= 0) {
    const int k = static_cast<int>(-x0.numerator().get_si());
    const Rational sign(k % 2 == 0 ? 1 : -1);
    if (power > 0) return {-1, SqrtPiNumber(sign / exact::factorial(k))};
    return {1, SqrtPiNumber(sign * exact::factorial(k))};
  }
  const SqrtPiNumber g = gamma_at(x0);
  return {0, power > 0 ? g : SqrtPiNumber(1) / g};
}

Leading zeta_leading(const Rational& y0, int m) {
  const Rational twice = y0 * Rational(2);
  if (!twice.is_integer()) return {0, std::nullopt};
  const long sigma = twice.numerator().get_si();
  const long d = m - 1;
  if (sigma >= 1 && sigma <= d) {
    SqrtPiNumber r = barnes::base_zeta_residue(y0, m);
    if (r.is_zero()) return {0, std::nullopt};
    return {-1, std::move(r)};
  }
  if (sigma <= 0) return {0, barnes::base_zeta_value_nonpositive(static_cast<int>(-sigma), m)};
  return {0, std::nullopt};
}

Rational half(int j) { return Rational(j, 2); }

}  // namespace

SqrtPiNumber term_residue(const ZetaTerm& term, const Rational& s0, int m) {
  if (term.coeff.is_zero()) return SqrtPiNumber();
  std::vector<Leading> parts;
  for (const auto& g : term.gammas) parts.push_back(gamma_leading(s0 + g.offset, g.power));
  parts.push_back(zeta_leading(s0 + term.zeta_shift, m));
  int order = 0;
  bool unknown = false, vanishing = false;
  for (const auto& p : parts) {
    order += p.order;
    if (!p.coeff) unknown = true;
    else if (p.coeff->is_zero()) vanishing = true;
  }
  // a vanishing leading coefficient only raises the true order
  if (order >= 0) return SqrtPiNumber();
  if (order == -1) {
    if (vanishing) return SqrtPiNumber();
    if (unknown) throw ResidueError("term_residue: simple pole multiplies a zeta value with no closed form");
    SqrtPiNumber r = term.coeff;
    for (const auto& p : parts) r *= *p.coeff;
    return r;
  }
  throw ResidueError("term_residue: pole of order above one at s0 = " + s0.to_string());
}

std::vector<ZetaTerm> asymptotic_terms(int i, const Rational& shift, int p_power) {
  const Rational zeta_shift = shift + half(i - p_power);
  if (i == -1) {
    // Gamma(s - 1/2) / (4 sqrt(pi) Gamma(s + 1)) zeta_S(s - 1/2)
    return {{SqrtPiNumber::monomial(Rational(1, 4), -1), {{shift - half(1), 1}, {shift + Rational(1), -1}}, zeta_shift}};
  }
  if (i == 0) return {{SqrtPiNumber(Rational(-1, 4)), {}, zeta_shift}};
  if (i < 1 || i > 4) throw std::invalid_argument("asymptotic_terms: i must lie in -1..4");
  // -(1/Gamma(s)) sum_l c_l Gamma(s + l/2) / Gamma(l/2) zeta_S(s + i/2), D_i = sum_l c_l t^l
  static const std::vector<debye::CumulantPolynomial> D = debye::cumulants(4);
  const exact::Poly& poly = D[static_cast<std::size_t>(i - 1)].poly;
  std::vector<ZetaTerm> out;
  for (int l = 1; l <= poly.degree(); ++l) {
    const Rational& c = poly.coeff(l);
    if (c.is_zero()) continue;
    out.push_back({SqrtPiNumber(-c) / gamma_at(half(l)), {{shift + half(l), 1}, {shift, -1}}, zeta_shift});
  }
  return out;
}

namespace {

void require_ball_dimension(int m) {
  if (m < 4 || m % 2 != 0) throw std::domain_error("ball residues need even m >= 4");
}

SqrtPiNumber residue_sum(const std::vector<ZetaTerm>& terms, const Rational& s0, int m) {
  SqrtPiNumber r;
  for (const auto& t : terms) r += term_residue(t, s0, m);
  return r;
}

// sum_j w_j sum_{i=-1..4} Res A_i(s + shift) weighted by p^j
SqrtPiNumber weighted_residue(int m, const Rational& s0, const Rational& shift, const std::vector<std::pair<int, Rational>>& w) {
  SqrtPiNumber r;
  for (const auto& [j, c] : w) {
    SqrtPiNumber inner;
    for (int i = -1; i <= 4; ++i) inner += residue_sum(asymptotic_terms(i, shift, j), s0, m);
    r += SqrtPiNumber(c) * inner;
  }
  return r;
}

}  // namespace

ResiduePipeline residue_pipeline(int m) {
  require_ball_dimension(m);
  const Rational s0(m - 3, 2);
  ResiduePipeline out;
  out.m = m;
  for (int i = -1; i <= 2; ++i) {
    out.residues[static_cast<std::size_t>(i + 1)] = residue_sum(asymptotic_terms(i), s0, m);
    out.a3 += out.residues[static_cast<std::size_t>(i + 1)];
  }
  out.a3 *= gamma_at(s0);
  return out;
}

std::array<SqrtPiNumber, 4> listed_residues(int m, bool* limit_convention) {
  require_ball_dimension(m);
  const Rational ds(barnes::spinor_dimension(m));
  const SqrtPiNumber g = gamma_at(Rational(m - 1, 2)) * gamma_at(Rational(m - 3, 2));
  const SqrtPiNumber two_m(exact::pow(Rational(2), m));
  std::array<SqrtPiNumber, 4> r;
  r[0] = SqrtPiNumber(-ds / Rational(6) * Rational(m - 2)) / (two_m * g);
  if (limit_convention) *limit_convention = (m == 4);
  r[1] = m == 4 ? SqrtPiNumber() : SqrtPiNumber(ds / Rational(96)) / gamma_at(Rational(m - 4));
  r[2] = SqrtPiNumber(ds / Rational(6) * Rational(5 * m - 13)) / (two_m * g);
  r[3] = SqrtPiNumber(-ds / Rational(256) * Rational((m - 3) * (m - 3) * (5 * m - 9))) / gamma_at(Rational(m - 1));
  return r;
}

SqrtPiNumber a3_ball_closed_form(int m) {
  require_ball_dimension(m);
  const Rational ds(barnes::spinor_dimension(m));
  const SqrtPiNumber gm = gamma_at(Rational(m, 2));
  const SqrtPiNumber gm1 = gamma_at(Rational(m + 1, 2));
  const SqrtPiNumber num = SqrtPiNumber(Rational(8 * (4 * m - 11))) * gm +
                           SqrtPiNumber(Rational(17 - 7 * m)) * exact::gamma_half(1) * gm1;
  const SqrtPiNumber pre(exact::pow(Rational(2), -5 - m) * Rational(m - 1) * ds);
  return pre * num / (SqrtPiNumber(3) * gm * gm1);
}

SqrtPiNumber sphere_volume(int m) {
  return SqrtPiNumber::monomial(Rational(2), m) / gamma_at(Rational(m, 2));
}

namespace {

// (4 pi)^{-k/2}
SqrtPiNumber heat_prefactor(int k) { return SqrtPiNumber::monomial(exact::pow(Rational(2), -k), -k); }

invariants::BoundaryGeometryData ball_data(int m, const SmearedF& f) {
  auto data = invariants::BoundaryGeometryData::zero(invariants::clifford_rep(m));
  data.L = exact::QMatrix::Identity(m - 1, m - 1);
  data.theta = exact::identity(data.dim()) * exact::GaussRational(Rational(m - 1, 2));
  data.F = f.at_boundary();
  data.F_m = f.normal_derivative();
  data.F_mm = f.second_normal_derivative();
  return data;
}

}  // namespace

SqrtPiNumber a3_ball_from_table(int m, const invariants::CoefficientTable& table) {
  require_ball_dimension(m);
  const Rational ds(barnes::spinor_dimension(m));
  const exact::CoeffExpr n1(Rational(m - 1));
  const exact::CoeffExpr combo = table.at("d16") * n1 + table.at("d17") * n1 * n1;
  return heat_prefactor(m - 1) * sphere_volume(m) * SqrtPiNumber(ds) * combo.eval(m);
}

SqrtPiNumber smeared_a3_exact(int m, const SmearedF& f) {
  require_ball_dimension(m);
  const Rational s0(m - 3, 2);
  // zeta(r^2; s) and zeta(r^4; s) from the radial integrals: mu^{-2} shifts s by
  // one, p^j lowers the base zeta argument by j/2
  const SqrtPiNumber z1 = weighted_residue(m, s0, Rational(0), {{0, Rational(1)}});
  SqrtPiNumber total = SqrtPiNumber(f.f0) * z1;
  if (!f.f1.is_zero()) {
    const SqrtPiNumber z2 = SqrtPiNumber(Rational(1, 3)) * z1 +
                            weighted_residue(m, s0, Rational(1), {{0, Rational(1, 3)}, {1, Rational(1)}, {2, Rational(2, 3)}});
    total += SqrtPiNumber(f.f1) * z2;
  }
  if (!f.f2.is_zero()) {
    const SqrtPiNumber z4 =
        SqrtPiNumber(Rational(1, 5)) * z1 +
        weighted_residue(m, s0, Rational(1), {{0, Rational(4, 15)}, {1, Rational(10, 15)}, {2, Rational(4, 15)}}) +
        weighted_residue(m, s0, Rational(2),
                         {{0, Rational(-8, 15)}, {1, Rational(-20, 15)}, {3, Rational(20, 15)}, {4, Rational(8, 15)}});
    total += SqrtPiNumber(f.f2) * z4;
  }
  return gamma_at(s0) * total;
}

SqrtPiNumber smeared_a3_from_table(int m, const SmearedF& f, const invariants::CoefficientTable& table) {
  require_ball_dimension(m);
  const auto data = ball_data(m, f);
  return heat_prefactor(m - 1) * sphere_volume(m) * invariants::a3_density(data, table).value();
}

std::array<SqrtPiNumber, 4> ball_exact_coefficients(int m, const SmearedF& f) {
  require_ball_dimension(m);
  const auto data = ball_data(m, f);
  const Rational ds(barnes::spinor_dimension(m));
  // int_0^1 F(r) r^{m-1} dr
  const Rational radial = f.f0 / Rational(m) + f.f1 / Rational(m + 2) + f.f2 / Rational(m + 4);
  std::array<SqrtPiNumber, 4> a;
  a[0] = heat_prefactor(m) * sphere_volume(m) * SqrtPiNumber(ds * radial);
  a[1] = heat_prefactor(m - 1) * sphere_volume(m) * invariants::a1_density(data).value();
  a[2] = heat_prefactor(m) * sphere_volume(m) * invariants::a2_boundary_density(data).value();
  a[3] = heat_prefactor(m - 1) * sphere_volume(m) * invariants::a3_density(data).value();
  return a;
}

}  // namespace heatspec::ballspec
