#pragma once

#include "lamb/constants.hpp"
#include "lamb/dirac_levels.hpp"

namespace lamb {

/// Truncated charge renormalisation Z3 = 1 + (alpha/3pi)(-q^2/5m^2) with the
/// subtraction point at m, so the logarithm is absent. Only meaningful for
/// |q^2/m^2| << 1; the value is returned for any finite input.
double vacuum_polarization_z3(double alpha, double q2_over_m2);

/// Coefficient c of the contact term c/m^2 delta(r) from vacuum polarisation,
/// c = -4 alpha^2/15.
double uehling_delta_coefficient(double alpha);

/// Pieces of the off-shell vertex at momentum transfer q^2 and p^2 = mu^2(1-zeta).
struct VertexParts {
  double z1_inverse_bracket = 0.0;  // 11/2 - 3 zeta + 4(1+zeta) ln zeta
  double q2_coefficient = 0.0;      // 1/6 + zeta/2 + (4/3) ln zeta + 2 zeta ln zeta
  double anomaly_factor = 0.0;      // 1 + 3 zeta + 2 zeta ln zeta
};

/// Throws std::domain_error unless 0 < zeta < 1 and |q^2|/4mu^2 < 1.
VertexParts vertex_parts(double zeta, double q2_over_mu2);

/// Electron g-factor 2[1 + (alpha/2pi)(1 + 3 zeta + 2 zeta ln zeta)].
double offshell_g_factor(double alpha, double zeta);

/// Dimensionless bracket of the contact term in the effective radiative
/// potential, in units of Z alpha^2/mu^2. mu2_over_m2 scales the Uehling piece.
double effective_delta_bracket(double zeta, double mu2_over_m2 = 1.0);

/// -(8/3) ln zeta + 2/15 + 2 zeta (1 - ln zeta)
double s_state_bracket(double zeta);

/// (1 + zeta(3 + 2 ln zeta)) C_jl / (2l + 1) for l >= 1, with
/// C_jl = 1/(l+1) when j = l + 1/2 and -1/l when j = l - 1/2.
double spin_orbit_bracket(double zeta, const QuantumState& s);

/// |psi_ns(0)|^2 = Z^3 alpha^3 mu^3/(pi n^3), in Hz^3 with hbar = c = 1.
double s_state_density(double alpha, int Z, int n, double mu_hz);

/// One-loop radiative shift of level s in Hz,
/// (1/(1+b)) (Z^4/n^3) (alpha^3 R_inf/pi) [s_state_bracket or spin_orbit_bracket].
/// Throws std::domain_error unless 0 < zeta < 1.
double rad_level_shift_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s,
                          double zeta);

}  // namespace lamb
