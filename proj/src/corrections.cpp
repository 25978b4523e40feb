#include "lamb/corrections.hpp"

#include <cmath>

namespace lamb {

double recoil1_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s) {
  const double fm1 = dirac_f_minus_one(s, atom.Z * c.alpha);
  const double b = atom.b;
  const double onepb = 1.0 + b;
  return -c.m_e_hz * b / (2.0 * onepb * onepb * onepb) * fm1 * fm1;
}

double recoil2_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s) {
  if (s.is_s_state()) return 0.0;
  const double za = atom.Z * c.alpha;
  const double za4 = za * za * za * za;
  const double mu = reduced_mass_hz(c, atom);
  const double m_n = c.m_e_hz / atom.b;
  const double n3 = static_cast<double>(s.n()) * s.n() * s.n();
  const double angular = 1.0 / s.j_plus_half() - 1.0 / (s.l() + 0.5);
  return za4 * (mu / m_n) * (mu / m_n) * mu / (2.0 * n3) * angular;
}

double nuclear_size_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s) {
  if (!s.is_s_state()) return 0.0;
  const double mass_factor = 1.0 / (1.0 + atom.b);
  const double z4 = std::pow(static_cast<double>(atom.Z), 4);
  const double n3 = static_cast<double>(s.n()) * s.n() * s.n();
  const double radius = atom.r_N_fm / c.bohr_radius_ref;
  return mass_factor * mass_factor * mass_factor * z4 / n3 * kNuclearSizeCoefficientHz * radius * radius;
}

}  // namespace lamb
