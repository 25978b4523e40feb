#include "lamb/twobody.hpp"

#include <cmath>
#include <stdexcept>

namespace lamb {

void TwoBodySystem::validate() const {
  if (!(m1 > 0.0 && m2 > 0.0)) throw std::invalid_argument("TwoBodySystem: masses must be positive");
  if (!(z_eff > 0.0)) throw std::invalid_argument("TwoBodySystem: z_eff must be positive");
}

TwoBodySystem charge_conjugate_pair(double m_hz, double Z) { return {m_hz, m_hz, Z * Z}; }

double coulomb_epsilon(const TwoBodySystem& sys, double alpha, int n) {
  sys.validate();
  if (n < 1) throw std::invalid_argument("coulomb_epsilon: n must be >= 1");
  const double g = sys.z_eff * alpha;
  return -g * g * sys.reduced_mass() / (2.0 * static_cast<double>(n) * n);
}

TotalEnergy total_energy(const TwoBodySystem& sys, double epsilon) {
  sys.validate();
  const double M = sys.total_mass();
  double x = 1.0 + 2.0 * epsilon / M;
  if (x < 0.0) {
    if (x < -2e-12) throw std::domain_error("total_energy: epsilon below -M/2 (supercritical)");
    x = 0.0;
  }
  TotalEnergy out;
  out.energy = M * std::sqrt(x);
  // M - E = -2 eps/(1 + sqrt(x)), exact for small |eps|
  out.binding = -2.0 * epsilon / (1.0 + std::sqrt(x));
  if (x == 0.0) out.binding = M;
  return out;
}

double strong_coupling_zmax(double alpha) { return std::sqrt(std::sqrt(4.0 / (alpha * alpha))); }

}  // namespace lamb
