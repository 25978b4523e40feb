#include "lamb/self_energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lamb {

std::string_view scheme_label(ZetaScheme s) {
  switch (s) {
    case ZetaScheme::SelfEnergy: return "S";
    case ZetaScheme::Virial: return "V";
    case ZetaScheme::ArithmeticMean: return "S+V";
    case ZetaScheme::GeometricMean: return "SV";
  }
  return "?";
}

std::optional<ZetaScheme> parse_scheme(std::string_view label) {
  for (auto s : kAllSchemes)
    if (scheme_label(s) == label) return s;
  return std::nullopt;
}

SelfEnergyTerms self_energy_terms_at_zeta(double alpha, double zeta) {
  if (!(zeta >= 0.0 && zeta < 1.0)) throw std::domain_error("self_energy_terms: zeta must lie in [0, 1)");
  constexpr double pi = std::numbers::pi;
  const double x = 1.0 - zeta;
  SelfEnergyTerms t;
  if (zeta == 0.0) {
    t.a_over_mu = alpha / (3.0 * pi);
    t.b_term = -alpha / (3.0 * pi);
    t.z2 = 1.0 / (1.0 - t.b_term);
    t.delta_mu_over_mu = 0.0;
    return t;
  }
  const double r = zeta / x;
  const double ld = std::log(zeta);
  t.a_over_mu = alpha / pi * (1.0 / 3.0 + r * ld);
  t.b_term = alpha / (4.0 * pi) * (-4.0 / 3.0 - r * (1.0 + (1.0 + x) / x * ld));
  t.z2 = 1.0 / (1.0 - t.b_term);
  // A/mu + B with the constant 4/3 terms cancelled analytically
  const double numerator = alpha / (4.0 * pi) * r * ((4.0 - (1.0 + x) / x) * ld - 1.0);
  t.delta_mu_over_mu = numerator * t.z2;
  return t;
}

SelfEnergyTerms self_energy_terms(double alpha, double x) {
  if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("self_energy_terms: x = p^2/mu^2 must lie in (0, 1]");
  return self_energy_terms_at_zeta(alpha, 1.0 - x);
}

double delta_mu_approx(double alpha, double zeta) {
  if (!(zeta > 0.0 && zeta < 1.0)) throw std::domain_error("delta_mu_approx: zeta must lie in (0, 1)");
  constexpr double pi = std::numbers::pi;
  return alpha / (4.0 * pi) * (-zeta + 2.0 * zeta * std::log(zeta)) / (1.0 + alpha / (3.0 * pi));
}

double self_energy_closure(double zeta) { return zeta * (1.0 - 2.0 * std::log(zeta)); }

double zeta_self_energy(double alpha, int Z, int n) {
  if (Z < 1 || n < 1) throw std::domain_error("zeta_self_energy: need Z >= 1 and n >= 1");
  constexpr double pi = std::numbers::pi;
  const double z2n2 = static_cast<double>(Z) * Z / (static_cast<double>(n) * n);
  const double target = 2.0 * pi * (1.0 + alpha / (3.0 * pi)) * z2n2 * alpha;
  constexpr double lo = 1e-16;
  constexpr double hi = 0.5;
  if (!(target > self_energy_closure(lo) && target < self_energy_closure(hi)))
    throw std::runtime_error("zeta_self_energy: target outside the solver bracket");
  return solve_monotone(self_energy_closure, target, lo, hi, 1e-14).root;
}

double zeta_virial(double alpha, int Z, int n) {
  if (Z < 1 || n < 1) throw std::domain_error("zeta_virial: need Z >= 1 and n >= 1");
  return 2.0 * Z * Z * alpha * alpha / (static_cast<double>(n) * n);
}

double zeta(ZetaScheme scheme, double alpha, int Z, int n) {
  switch (scheme) {
    case ZetaScheme::SelfEnergy: return zeta_self_energy(alpha, Z, n);
    case ZetaScheme::Virial: return zeta_virial(alpha, Z, n);
    case ZetaScheme::ArithmeticMean: return 0.5 * (zeta_self_energy(alpha, Z, n) + zeta_virial(alpha, Z, n));
    case ZetaScheme::GeometricMean: return std::sqrt(zeta_self_energy(alpha, Z, n) * zeta_virial(alpha, Z, n));
  }
  throw std::invalid_argument("zeta: unknown scheme");
}

std::array<ZetaTableRow, 3> zeta_table(double alpha) {
  std::array<ZetaTableRow, 3> rows;
  constexpr int kN[] = {4, 2, 1};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    row.Z = 1;
    row.n = kN[i];
    for (std::size_t k = 0; k < kAllSchemes.size(); ++k) {
      row.zeta[k] = zeta(kAllSchemes[k], alpha, row.Z, row.n);
      row.minus_log_zeta[k] = -std::log(row.zeta[k]);
    }
  }
  return rows;
}

}  // namespace lamb
