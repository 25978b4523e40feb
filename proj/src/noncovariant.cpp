#include "lamb/noncovariant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lamb/corrections.hpp"
#include "lamb/dirac_levels.hpp"
#include "lamb/radiative.hpp"

namespace lamb {

namespace {

NoncovCoefficients build(const PhysicalConstants& c, double mu_hz, double beta) {
  if (!(mu_hz > 0.0)) throw std::domain_error("noncov_coefficients: mu must be positive");
  constexpr double pi = std::numbers::pi;
  const double g2 = c.g_electron * c.g_electron;
  const double unit = c.alpha / (pi * mu_hz * mu_hz * mu_hz);
  NoncovCoefficients k;
  k.alpha = c.alpha;
  k.mu_hz = mu_hz;
  k.beta = beta;
  k.b2_1 = -2.0 / 15.0 * unit;
  k.b2_2 = -g2 / 4.0 / 15.0 * unit;
  k.b1_2 = beta / (2.0 * mu_hz);
  const double mu3 = mu_hz * mu_hz * mu_hz;
  k.b2_renormalized = k.b2_1 + k.b2_2 + (3.0 * beta + 3.0 * beta * beta + beta * beta * beta) / (8.0 * mu3);
  k.b2_leading = k.b2_1 + k.b2_2 + 3.0 * beta / (8.0 * mu3);
  k.mu_obs_over_mu = 1.0 / (1.0 + beta);
  return k;
}

}  // namespace

double NoncovCoefficients::in_alpha_over_pi_m3(double b2, double mass_hz) const {
  return b2 * mass_hz * mass_hz * mass_hz * std::numbers::pi / alpha;
}

NoncovCoefficients noncov_coefficients(const PhysicalConstants& c, double mu_hz) {
  const double g2 = c.g_electron * c.g_electron;
  const double beta = g2 * c.alpha / (2.0 * std::numbers::pi) * (4.0 / 3.0 * std::numbers::ln2 + 2.0);
  return build(c, mu_hz, beta);
}

NoncovCoefficients noncov_coefficients_without_spin_mass(const PhysicalConstants& c, double mu_hz) {
  return build(c, mu_hz, 0.0);
}

boost::rational<std::int64_t> p4_bracket(int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("p4_bracket: need n >= 1 and 0 <= l < n");
  return boost::rational<std::int64_t>(8 * n, 2 * l + 1) - 3;
}

double noncov_rad_shift_hz(double alpha, int Z, int n, int l, double b2, double mass_hz) {
  const double bracket = boost::rational_cast<double>(p4_bracket(n, l));
  const double x = Z * alpha * mass_hz / n;
  return bracket * b2 * x * x * x * x;
}

std::string_view order_label(NoncovOrder order) {
  return order == NoncovOrder::Leading ? "leading" : "full";
}

NoncovLambShift noncov_classic_lamb(const PhysicalConstants& c, NoncovOrder order) {
  const AtomSpec h = hydrogen(c);
  const double mu = reduced_mass_hz(c, h);
  const auto k = noncov_coefficients(c, mu);
  NoncovLambShift out;
  out.order = order;
  out.b2_hz3 = order == NoncovOrder::Leading ? k.b2_leading : k.b2_renormalized;
  out.mass_hz = order == NoncovOrder::Leading ? mu : k.mu_obs_hz();
  out.self_energy_hz = noncov_rad_shift_hz(c.alpha, h.Z, 2, 0, out.b2_hz3, out.mass_hz) -
                       noncov_rad_shift_hz(c.alpha, h.Z, 2, 1, out.b2_hz3, out.mass_hz);
  out.uehling_hz = uehling_delta_coefficient(c.alpha) / (c.m_e_hz * c.m_e_hz) * h.Z *
                   s_state_density(c.alpha, h.Z, 2, mu);
  out.nuclear_size_hz = nuclear_size_hz(c, h, QuantumState(2, 0, 1)) - nuclear_size_hz(c, h, QuantumState(2, 1, 1));
  out.total_hz = out.self_energy_hz + out.uehling_hz + out.nuclear_size_hz;
  return out;
}

}  // namespace lamb
