#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace lamb {

/// Prescription for the off-mass-shell parameter zeta, p^2 = mu^2 (1 - zeta).
enum class ZetaScheme {
  SelfEnergy,      // <S>: mass increment equals the Bohr binding energy
  Virial,          // <V>: from <p^2> via the virial theorem
  ArithmeticMean,  // <S+V>
  GeometricMean,   // <SV>
};

inline constexpr std::array kAllSchemes = {ZetaScheme::SelfEnergy, ZetaScheme::Virial,
                                           ZetaScheme::ArithmeticMean, ZetaScheme::GeometricMean};

/// "S", "V", "S+V", "SV".
std::string_view scheme_label(ZetaScheme s);
/// Inverse of scheme_label; std::nullopt for anything else.
std::optional<ZetaScheme> parse_scheme(std::string_view label);

/// One-loop self-energy Sigma(p) = A + B pslash of an electron with mass mu,
/// with the subtraction scale fixed at mu_2 = mu e^{-5/6} so that the mass
/// increment vanishes on shell.
struct SelfEnergyTerms {
  double a_over_mu = 0.0;
  double b_term = 0.0;
  double z2 = 0.0;                 // 1/(1 - B)
  double delta_mu_over_mu = 0.0;   // (A/mu + B)/(1 - B)
};

/// Evaluates A/mu and B at x = p^2/mu^2 in (0, 1]. The (1-x) ln(1-x) terms
/// are taken at their limit 0 when x == 1. Throws std::domain_error outside
/// (0, 1].
SelfEnergyTerms self_energy_terms(double alpha, double x);

/// Same evaluation parameterised by zeta = 1 - x, so small zeta keeps its
/// full precision. Throws std::domain_error outside [0, 1).
SelfEnergyTerms self_energy_terms_at_zeta(double alpha, double zeta);

/// Leading-order mass increment (alpha/4pi)(-zeta + 2 zeta ln zeta)/(1 + alpha/3pi).
/// Throws std::domain_error outside (0, 1).
double delta_mu_approx(double alpha, double zeta);

/// g(zeta) = zeta (1 - 2 ln zeta), strictly increasing on (0, e^{-1/2}).
double self_energy_closure(double zeta);

/// Root of zeta (1 - 2 ln zeta) = 2 pi (1 + alpha/3pi) Z^2 alpha / n^2.
/// Throws std::domain_error for Z < 1 or n < 1 and std::runtime_error when the
/// target lies outside the bracket [1e-16, 0.5].
double zeta_self_energy(double alpha, int Z, int n);

/// 2 Z^2 alpha^2 / n^2.
double zeta_virial(double alpha, int Z, int n);

double zeta(ZetaScheme scheme, double alpha, int Z, int n);

/// Bracketed bisection with secant refinement for a monotone function on
/// [lo, hi]. Stops when the bracket width falls below rel_width * |x|.
struct RootResult {
  double root = 0.0;
  int iterations = 0;
};
template <class F>
RootResult solve_monotone(F&& g, double target, double lo, double hi, double rel_width);

/// One row of the zeta table, indexed by Z^2/n^2.
struct ZetaTableRow {
  int Z = 1;
  int n = 1;
  std::array<double, 4> zeta{};  // ordered as kAllSchemes
  std::array<double, 4> minus_log_zeta{};
};

/// Rows for Z^2/n^2 = 1/16, 1/4, 1 (Z = 1 and n = 4, 2, 1).
std::array<ZetaTableRow, 3> zeta_table(double alpha);

}  // namespace lamb

#include "lamb/detail/root_solver.ipp"
