#include "heatspec/invariants/density.hpp"

#include <sstream>
#include <stdexcept>

namespace heatspec::invariants {

using exact::dagger;
using exact::identity;
using exact::trace;
using exact::zeros;

namespace {

void check_square(const CMatrix& a, Eigen::Index n, const char* what) {
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument(std::string("BoundaryGeometryData: ") + what + " has wrong size");
}

GaussRational tr(const CMatrix& a) { return trace(a); }
GaussRational gr(const Rational& x) { return GaussRational(x); }

Rational trace_l(const QMatrix& L) {
  Rational s;
  for (Eigen::Index a = 0; a < L.rows(); ++a) s += L(a, a);
  return s;
}

}  // namespace

BoundaryGeometryData BoundaryGeometryData::zero(const CliffordRep& rep) {
  BoundaryGeometryData d;
  d.rep = rep;
  const Eigen::Index n = rep.dim();
  d.psi = zeros(n);
  d.theta = zeros(n);
  d.E = zeros(n);
  d.L = QMatrix::Constant(rep.m - 1, rep.m - 1, Rational(0));
  return d;
}

void BoundaryGeometryData::validate() const {
  if (rep.gammas.size() != static_cast<std::size_t>(rep.m) || rep.m < 2)
    throw std::invalid_argument("BoundaryGeometryData: representation does not have m generators");
  const Eigen::Index n = dim();
  for (const auto& g : rep.gammas) check_square(g, n, "gamma");
  check_square(psi, n, "psi");
  check_square(theta, n, "theta");
  check_square(E, n, "E");
  if (L.rows() != m() - 1 || L.cols() != m() - 1) throw std::invalid_argument("BoundaryGeometryData: L has wrong size");
  if (psi_hat_m) check_square(*psi_hat_m, n, "psi_hat_m");
  const auto check_list = [&](const std::vector<CMatrix>& v, const char* what) {
    if (v.empty()) return;
    if (v.size() != static_cast<std::size_t>(m() - 1)) throw std::invalid_argument(std::string("BoundaryGeometryData: ") + what + " needs m-1 entries");
    for (const auto& x : v) check_square(x, n, what);
  };
  check_list(psi_hat_colon, "psi_hat_colon");
  check_list(theta_colon, "theta_colon");
  check_list(W_am, "W_am");
  if (!W_ab.empty()) {
    if (W_ab.size() != static_cast<std::size_t>(m() - 1)) throw std::invalid_argument("BoundaryGeometryData: W_ab needs m-1 rows");
    for (const auto& row : W_ab) check_list(row, "W_ab");
  }
}

GaussRational DensityValue::coeff(int beta_power, int sqrt_pi_power) const {
  auto it = terms_.find({beta_power, sqrt_pi_power});
  return it == terms_.end() ? GaussRational() : it->second;
}

bool DensityValue::is_real() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

void DensityValue::add(const Key& key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DensityValue::add(const CoeffExpr& coeff, const GaussRational& value, int sqrt_pi_power) {
  if (value.is_zero() || coeff.is_zero()) return;
  for (const auto& [k, r] : coeff.at_m(Rational(m_))) add({k, sqrt_pi_power}, value * GaussRational(r));
}

SqrtPiNumber DensityValue::value() const {
  if (!is_real()) throw std::domain_error("DensityValue: non-real value " + to_string());
  const SqrtPiNumber b = exact::beta_value(m_);
  SqrtPiNumber out;
  for (const auto& [key, c] : terms_) out += SqrtPiNumber::monomial(c.re, key.second) * pow(b, key.first);
  return out;
}

std::string DensityValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (key.first != 0) os << "·beta^" << key.first;
    if (key.second != 0) os << "·pi^{" << key.second << "/2}";
  }
  return os.str();
}

DensityValue& DensityValue::operator+=(const DensityValue& o) {
  if (m_ != o.m_ && !o.terms_.empty() && !terms_.empty()) throw std::invalid_argument("DensityValue: dimension mismatch");
  if (terms_.empty()) m_ = o.m_;
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

DensityValue& DensityValue::operator-=(const DensityValue& o) {
  if (m_ != o.m_ && !o.terms_.empty() && !terms_.empty()) throw std::invalid_argument("DensityValue: dimension mismatch");
  if (terms_.empty()) m_ = o.m_;
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

DensityValue a0_density(const BoundaryGeometryData& data) {
  data.validate();
  DensityValue v(data.m());
  v.add({0, 0}, gr(data.F) * GaussRational(Rational(data.dim())));
  return v;
}

DensityValue a1_density(const BoundaryGeometryData& data) {
  data.validate();
  DensityValue v(data.m());
  const GaussRational trf = gr(data.F) * GaussRational(Rational(data.dim()));
  v.add((CoeffExpr::beta() - CoeffExpr(1)) / exact::RationalFunction(4), trf);
  return v;
}

DensityValue a2_interior_density(const BoundaryGeometryData& data) {
  data.validate();
  DensityValue v(data.m());
  const GaussRational tr_i(Rational(data.dim()));
  v.add({0, 0}, gr(data.F) * (gr(data.tau) * tr_i + GaussRational(6) * tr(data.E)) / GaussRational(6));
  return v;
}

DensityValue a2_boundary_density(const BoundaryGeometryData& data) {
  data.validate();
  const int m = data.m();
  DensityValue v(m);
  const CMatrix psi_hat = data.rep.normal_inverse() * data.psi;
  const GaussRational tr_i(Rational(data.dim()));
  v.add({0, 0}, gr(data.F) * tr(psi_hat + dagger(psi_hat)) / GaussRational(2));
  // (1/3)(1 - (3/4) pi beta) L_aa F - (m-1)/(2(m-2)) (1 - (1/2) pi beta) F_m, pi = sqrt(pi)^2
  const GaussRational l_term = gr(trace_l(data.L) * data.F) * tr_i;
  v.add({0, 0}, l_term * GaussRational(Rational(1, 3)));
  v.add({1, 2}, l_term * GaussRational(Rational(-1, 4)));
  const Rational c = Rational(m - 1) / Rational(2 * (m - 2));
  const GaussRational f_term = gr(data.F_m) * tr_i;
  v.add({0, 0}, f_term * GaussRational(-c));
  v.add({1, 2}, f_term * GaussRational(c / Rational(2)));
  return v;
}

DensityValue a3_density(const BoundaryGeometryData& data, const CoefficientTable& t) {
  data.validate();
  const int m = data.m();
  const int nt = m - 1;
  const Eigen::Index n = data.dim();
  const auto& d = t.d;
  const auto& e = t.e;
  DensityValue v(m);

  const CMatrix ph = data.rep.normal_inverse() * data.psi;
  const CMatrix phs = dagger(ph);
  std::vector<CMatrix> gt;
  for (int a = 0; a < nt; ++a) gt.push_back(data.rep.tangential(a));
  const GaussRational F = gr(data.F), Fm = gr(data.F_m), Fmm = gr(data.F_mm);
  const GaussRational tr_i{Rational(n)};
  const Rational laa = trace_l(data.L);
  Rational lab2;
  for (int a = 0; a < nt; ++a)
    for (int b = 0; b < nt; ++b) lab2 += data.L(a, b) * data.L(a, b);

  // psi quadratic terms
  const GaussRational pp = tr(ph * ph), psps = tr(phs * phs);
  v.add(d[0], F * (pp + psps));
  v.add(d[1], F * (pp - psps));
  v.add(d[2], F * tr(phs * ph));
  GaussRational gpgp, gpsgps, gpsgp;
  for (const auto& g : gt) {
    gpgp += tr(g * ph * g * ph);
    gpsgps += tr(g * phs * g * phs);
    gpsgp += tr(g * phs * g * ph);
  }
  v.add(d[3], F * (gpgp + gpsgps));
  v.add(d[4], F * (gpgp - gpsgps));
  v.add(d[5], F * gpsgp);

  // derivative slots
  if (data.psi_hat_m) {
    const GaussRational a = tr(*data.psi_hat_m), b = tr(dagger(*data.psi_hat_m));
    v.add(d[6], F * (a + b));
    v.add(d[7], F * (a - b));
  }
  if (!data.psi_hat_colon.empty()) {
    GaussRational a, b;
    for (int k = 0; k < nt; ++k) {
      a += tr(gt[k] * data.psi_hat_colon[k]);
      b += tr(gt[k] * dagger(data.psi_hat_colon[k]));
    }
    v.add(d[8], F * (a + b));
    v.add(d[9], F * (a - b));
  }

  const GaussRational tp = tr(ph), tps = tr(phs);
  v.add(d[10], F * gr(laa) * (tp + tps));
  v.add(d[11], F * gr(laa) * (tp - tps));
  v.add(d[12], F * gr(data.tau) * tr_i);
  v.add(d[13], F * gr(data.rho_mm) * tr_i);
  if (!data.W_ab.empty()) {
    GaussRational w;
    for (int a = 0; a < nt; ++a)
      for (int b = 0; b < nt; ++b) w += tr(data.W_ab[a][b] * gt[a] * gt[b]);
    v.add(d[14], F * w);
  }
  if (!data.W_am.empty()) {
    GaussRational w;
    for (int a = 0; a < nt; ++a) w += tr(data.W_am[a] * gt[a]);
    v.add(d[15], F * w);
  }
  v.add(d[16], F * gr(lab2) * tr_i);
  v.add(d[17], F * gr(laa * laa) * tr_i);

  v.add(d[18], Fm * (tp + tps));
  v.add(d[19], Fm * (tp - tps));
  v.add(d[20], Fm * gr(laa) * tr_i);
  v.add(d[21], Fmm * tr_i);

  // Theta terms
  const CMatrix& th = data.theta;
  v.add(e[0], F * tr(th * th));
  GaussRational gtgt, gtgp, gtgps;
  for (const auto& g : gt) {
    gtgt += tr(g * th * g * th);
    gtgp += tr(g * th * g * ph);
    gtgps += tr(g * th * g * phs);
  }
  v.add(e[1], F * gtgt);
  if (!data.theta_colon.empty()) {
    GaussRational a;
    for (int k = 0; k < nt; ++k) a += tr(gt[k] * data.theta_colon[k]);
    v.add(e[2], F * a);
  }
  v.add(e[3], F * gr(laa) * tr(th));
  const GaussRational tphp = tr(th * ph), tphs = tr(th * phs);
  v.add(e[4], F * (tphp + tphs));
  v.add(e[5], F * (tphp - tphs));
  v.add(e[6], F * (gtgp + gtgps));
  v.add(e[7], F * (gtgp - gtgps));
  v.add(e[8], Fm * tr(th));
  return v;
}

BoundaryGeometryData adjoint_data(const BoundaryGeometryData& data) {
  data.validate();
  BoundaryGeometryData out = data;
  out.psi = dagger(data.psi);
  const CMatrix& gm = data.rep.normal();
  const CMatrix shift = identity(data.dim()).unaryExpr([&](const GaussRational& z) { return z * GaussRational(trace_l(data.L)); });
  out.theta = -(gm * data.theta * data.rep.normal_inverse()) + shift;
  return out;
}

}  // namespace heatspec::invariants
