#pragma once

namespace lamb {

/// Two particles bound by a Coulomb interaction of strength z_eff alpha.
/// Masses are rest energies in Hz.
struct TwoBodySystem {
  double m1 = 0.0;
  double m2 = 0.0;
  double z_eff = 1.0;

  double total_mass() const { return m1 + m2; }
  double reduced_mass() const { return m1 * m2 / (m1 + m2); }

  /// Throws std::invalid_argument unless both masses and z_eff are positive.
  void validate() const;
};

/// Positronium-like system with charges Ze and -Ze: z_eff = Z^2.
TwoBodySystem charge_conjugate_pair(double m_hz, double Z);

/// Coulomb eigenvalue of the reduced one-body equation, -(z_eff alpha)^2 mu/(2 n^2).
/// Throws std::invalid_argument for n < 1.
double coulomb_epsilon(const TwoBodySystem& sys, double alpha, int n);

struct TotalEnergy {
  double energy = 0.0;   // E = M sqrt(1 + 2 eps/M)
  double binding = 0.0;  // B = M - E
};

/// Maps the one-body eigenvalue onto the two-body energy. An epsilon below
/// -M/2 by less than 1e-12 M is treated as -M/2; anything lower throws
/// std::domain_error (supercritical).
TotalEnergy total_energy(const TwoBodySystem& sys, double epsilon);

/// (4/alpha^2)^{1/4}, the charge at which the ground state reaches E = 0.
double strong_coupling_zmax(double alpha);

}  // namespace lamb
