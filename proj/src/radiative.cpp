#include "lamb/radiative.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lamb {

namespace {

void check_zeta(double zeta) {
  if (!(zeta > 0.0 && zeta < 1.0)) throw std::domain_error("zeta must lie in (0, 1)");
}

}  // namespace

double vacuum_polarization_z3(double alpha, double q2_over_m2) {
  return 1.0 + alpha / (3.0 * std::numbers::pi) * (-q2_over_m2 / 5.0);
}

double uehling_delta_coefficient(double alpha) { return -4.0 * alpha * alpha / 15.0; }

VertexParts vertex_parts(double zeta, double q2_over_mu2) {
  check_zeta(zeta);
  if (!(std::abs(q2_over_mu2) < 4.0)) throw std::domain_error("vertex_parts: need |q^2|/4mu^2 < 1");
  const double lz = std::log(zeta);
  VertexParts v;
  v.z1_inverse_bracket = 5.5 - 3.0 * zeta + 4.0 * (1.0 + zeta) * lz;
  v.q2_coefficient = 1.0 / 6.0 + 0.5 * zeta + 4.0 / 3.0 * lz + 2.0 * zeta * lz;
  v.anomaly_factor = 1.0 + 3.0 * zeta + 2.0 * zeta * lz;
  return v;
}

double offshell_g_factor(double alpha, double zeta) {
  return 2.0 * (1.0 + alpha / (2.0 * std::numbers::pi) * vertex_parts(zeta, 0.0).anomaly_factor);
}

double effective_delta_bracket(double zeta, double mu2_over_m2) {
  const auto v = vertex_parts(zeta, 0.0);
  // vertex contact term + Uehling + spin-interaction contact term
  return -v.q2_coefficient - 4.0 / 15.0 * mu2_over_m2 + 0.5 * v.anomaly_factor;
}

double s_state_bracket(double zeta) {
  check_zeta(zeta);
  const double lz = std::log(zeta);
  return -8.0 / 3.0 * lz + 2.0 / 15.0 + 2.0 * zeta * (1.0 - lz);
}

double spin_orbit_bracket(double zeta, const QuantumState& s) {
  check_zeta(zeta);
  if (s.is_s_state()) return 0.0;
  const int l = s.l();
  const double c_jl = s.two_j() == 2 * l + 1 ? 1.0 / (l + 1) : -1.0 / l;
  return (1.0 + zeta * (3.0 + 2.0 * std::log(zeta))) * c_jl / (2 * l + 1);
}

double s_state_density(double alpha, int Z, int n, double mu_hz) {
  const double za = Z * alpha;
  const double n3 = static_cast<double>(n) * n * n;
  return za * za * za * mu_hz * mu_hz * mu_hz / (std::numbers::pi * n3);
}

double rad_level_shift_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s,
                          double zeta) {
  check_zeta(zeta);
  const double z4 = std::pow(static_cast<double>(atom.Z), 4);
  const double n3 = static_cast<double>(s.n()) * s.n() * s.n();
  const double a3 = c.alpha * c.alpha * c.alpha;
  const double prefactor = z4 / n3 * (a3 * c.rydberg_inf_hz / std::numbers::pi) / (1.0 + atom.b);
  const double bracket = s.is_s_state() ? s_state_bracket(zeta) : spin_orbit_bracket(zeta, s);
  return prefactor * bracket;
}

}  // namespace lamb
