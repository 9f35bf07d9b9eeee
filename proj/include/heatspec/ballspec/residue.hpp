#pragma once

#include "heatspec/ballspec/trace.hpp"
#include "heatspec/exact/sqrt_pi.hpp"
#include "heatspec/invariants/coefficients.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace heatspec::ballspec {

using exact::Rational;
using exact::SqrtPiNumber;

/// Gamma(s + offset)^power with power = +1 or -1.
struct GammaFactor {
  Rational offset;
  int power = 1;
};

/// coeff * prod Gamma factors * zeta_S(s + zeta_shift), zeta_S the base zeta
/// function of the boundary sphere.
struct ZetaTerm {
  SqrtPiNumber coeff;
  std::vector<GammaFactor> gammas;
  Rational zeta_shift;
};

/// Raised when a residue needs data beyond leading Laurent coefficients, such
/// as a finite value of zeta_S at a regular point of positive argument.
class ResidueError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Res_{s=s0} of one term for the ball of dimension m.
SqrtPiNumber term_residue(const ZetaTerm& term, const Rational& s0, int m);

/// Terms of A_i(s + shift) with the order sum weighted by an extra p^{p_power};
/// i = -1, 0 or 1..4.
std::vector<ZetaTerm> asymptotic_terms(int i, const Rational& shift = Rational(0), int p_power = 0);

struct ResiduePipeline {
  int m = 4;
  std::array<SqrtPiNumber, 4> residues;  // Res A_{-1}, A_0, A_1, A_2 at s = (m-3)/2
  SqrtPiNumber a3;                       // Gamma((m-3)/2) * sum of the residues
};

ResiduePipeline residue_pipeline(int m);

/// The four listed closed forms. At m = 4 the A_0 entry uses 1/Gamma(0) = 0;
/// limit_convention reports whether that was applied.
std::array<SqrtPiNumber, 4> listed_residues(int m, bool* limit_convention = nullptr);

SqrtPiNumber a3_ball_closed_form(int m);
/// Vol(S^{m-1}) = 2 sqrt(pi)^m / Gamma(m/2).
SqrtPiNumber sphere_volume(int m);
/// (4 pi)^{-(m-1)/2} Vol(S^{m-1}) d_s (d16 (m-1) + d17 (m-1)^2) at beta(m).
SqrtPiNumber a3_ball_from_table(int m, const invariants::CoefficientTable& table = invariants::coefficient_table());

/// a_3(F) from the residues of the smeared zeta function.
SqrtPiNumber smeared_a3_exact(int m, const SmearedF& f);
/// a_3(F) from the boundary densities on ball data: L = I, Theta = (m-1)/2,
/// psi = 0, with F(1), F_{;m}, F_{;mm} from the boundary dictionary.
SqrtPiNumber smeared_a3_from_table(int m, const SmearedF& f,
                                const invariants::CoefficientTable& table = invariants::coefficient_table());

/// a_0 ... a_3 of the smeared ball trace from the invariant densities.
std::array<SqrtPiNumber, 4> ball_exact_coefficients(int m, const SmearedF& f = SmearedF{});

}  // namespace heatspec::ballspec
