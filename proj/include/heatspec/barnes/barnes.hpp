#pragma once

#include "heatspec/exact/poly.hpp"
#include "heatspec/exact/sqrt_pi.hpp"

#include <vector>

namespace heatspec::barnes {

using exact::Poly;
using exact::Rational;
using exact::SqrtPiNumber;

/// B_n^{(d)}(a), defined by e^{-at}/(1-e^{-t})^d = (-1)^d sum_n (-t)^{n-d} B_n^{(d)}(a) / n!.
struct GenBernoulli {
  int n = 0;
  int d = 1;
  Poly poly{Rational(1), 'a'};
};

/// Residue of zeta_B(s, a) = sum_n C(d+n-1, n) (n+a)^{-s} at s = z, as a polynomial in a.
struct BarnesResidueValue {
  int z = 0;
  int d = 1;
  Poly value{'a'};
};

struct MultiplicityTable {
  int m = 4;
  long d_s = 4;
  std::vector<Rational> entries;
};

GenBernoulli gen_bernoulli(int n, int d);
/// Zero polynomial for z outside 1..d.
BarnesResidueValue barnes_residue(int z, int d);
/// zeta_B(-k, a) for k >= 0, as a polynomial in a.
Poly barnes_value_nonpositive(int k, int d);

/// 2^{m/2}; only even m is supported.
long spinor_dimension(int m);
/// d_n(m) = d_s C(m+n-2, n) / 2 for even m >= 4.
long multiplicity(int n, int m);
MultiplicityTable multiplicity_table(int m, int n_max);

/// Res at s = s0 of zeta_S(s) = 2 d_s zeta_B(2s, m/2 - 1), with d = m - 1.
SqrtPiNumber base_zeta_residue(const Rational& s0, int m);
/// zeta_S(s) at s = -k/2, k >= 0, where it is finite.
SqrtPiNumber base_zeta_value_nonpositive(int k, int m);

}  // namespace heatspec::barnes
