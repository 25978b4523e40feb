#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string_view>

#include "lamb/constants.hpp"

namespace lamb {

/// Coefficients of the p^2 and p^4 terms generated by the noncovariant
/// one-loop self-energy, with the divergent constants already fixed
/// (b1 from the orbital part = 0, C2 = ln mu, b0 from the spin part = 0).
/// b1 values carry units 1/Hz, b2 values 1/Hz^3.
struct NoncovCoefficients {
  double alpha = 0.0;
  double mu_hz = 0.0;
  double b2_1 = 0.0;             // orbital part, -(2/15) alpha/(pi mu^3)
  double beta = 0.0;             // g^2 alpha/(2 pi) ((4/3) ln 2 + 2)
  double b1_2 = 0.0;             // beta/(2 mu)
  double b2_2 = 0.0;             // -(g^2/4)(1/15) alpha/(pi mu^3)
  double b2_renormalized = 0.0;  // b2_1 + b2_2 + (3 beta + 3 beta^2 + beta^3)/(8 mu^3)
  double b2_leading = 0.0;       // same, linear in beta
  double mu_obs_over_mu = 0.0;   // 1/(1 + beta)

  double mu_obs_hz() const { return mu_hz * mu_obs_over_mu; }
  /// b2 in units of alpha/(pi m^3) for a chosen mass m.
  double in_alpha_over_pi_m3(double b2, double mass_hz) const;
};

/// Throws std::domain_error unless mu_hz > 0.
NoncovCoefficients noncov_coefficients(const PhysicalConstants& c, double mu_hz);

/// Coefficient beta switched off: b2_renormalized == b2_1 + b2_2.
NoncovCoefficients noncov_coefficients_without_spin_mass(const PhysicalConstants& c, double mu_hz);

/// Angular factor 8n/(2l+1) - 3 of <n l| p^4 |n l> in units of (Z alpha mu)^4/n^4.
/// Throws std::invalid_argument unless n >= 1 and 0 <= l < n.
boost::rational<std::int64_t> p4_bracket(int n, int l);

/// [8n/(2l+1) - 3] b2 Z^4 alpha^4 mass^4/n^4 in Hz.
double noncov_rad_shift_hz(double alpha, int Z, int n, int l, double b2, double mass_hz);

enum class NoncovOrder {
  Leading,  // b2 linear in beta, expectation value with mu
  Full,     // b2 with all powers of beta, expectation value with mu_obs
};

std::string_view order_label(NoncovOrder order);

struct NoncovLambShift {
  NoncovOrder order = NoncovOrder::Leading;
  double b2_hz3 = 0.0;
  double mass_hz = 0.0;
  double self_energy_hz = 0.0;  // p^4 term, 2S minus 2P1/2
  double uehling_hz = 0.0;      // vacuum polarisation contact term on 2S
  double nuclear_size_hz = 0.0;
  double total_hz = 0.0;
};

/// Hydrogen 2S1/2 - 2P1/2 from the p^4 term, the Uehling term (with the full
/// mu^3/m_e^2 mass dependence) and the nuclear-size term.
NoncovLambShift noncov_classic_lamb(const PhysicalConstants& c, NoncovOrder order = NoncovOrder::Leading);

}  // namespace lamb
