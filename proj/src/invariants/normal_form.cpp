#include "heatspec/invariants/normal_form.hpp"

#include <stdexcept>

namespace heatspec::invariants {

using exact::GaussRational;

namespace {

CMatrix scale(const CMatrix& x, const Rational& s) {
  return x.unaryExpr([&s](const GaussRational& z) { return z * GaussRational(s); });
}

}  // namespace

NormalForm laplace_normal_form(const OperatorSymbol& sym) {
  const Eigen::Index n = sym.g.rows();
  if (sym.g.cols() != n || static_cast<Eigen::Index>(sym.a.size()) != n)
    throw std::invalid_argument("laplace_normal_form: inconsistent dimensions");
  const Eigen::Index k = sym.b.rows();
  const QMatrix ginv = exact::inverse(sym.g);
  const bool flat = sym.christoffel.empty();
  auto gamma = [&](Eigen::Index u, Eigen::Index s, Eigen::Index v) {
    return flat ? Rational(0) : sym.christoffel.at(u).at(s).at(v);
  };

  // contracted Christoffel g^{us} Gamma_{us}^v
  std::vector<Rational> contracted(n);
  for (Eigen::Index v = 0; v < n; ++v)
    for (Eigen::Index u = 0; u < n; ++u)
      for (Eigen::Index s = 0; s < n; ++s) contracted[v] += ginv(u, s) * gamma(u, s, v);

  NormalForm out;
  const CMatrix id = exact::identity(k);
  for (Eigen::Index dd = 0; dd < n; ++dd) {
    CMatrix w = exact::zeros(k);
    for (Eigen::Index v = 0; v < n; ++v) w += scale(sym.a[v] + scale(id, contracted[v]), sym.g(v, dd));
    out.omega.push_back(scale(w, Rational(1, 2)));
  }

  CMatrix e = sym.b;
  for (Eigen::Index v = 0; v < n; ++v) {
    for (Eigen::Index u = 0; u < n; ++u) {
      if (ginv(v, u).is_zero()) continue;
      CMatrix inner = out.omega[v] * out.omega[u];
      if (!sym.d_omega.empty()) inner += sym.d_omega.at(v).at(u);
      for (Eigen::Index s = 0; s < n; ++s) inner -= scale(out.omega[s], gamma(v, u, s));
      e -= scale(inner, ginv(v, u));
    }
  }
  out.E = e;
  return out;
}

}  // namespace heatspec::invariants
