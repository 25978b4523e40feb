#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lamb {

/// Result of a quadrature together with its estimated absolute error.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// int_0^1 du int_{-u}^{u} dv ln(a - s v^2), a = (1 - zeta + s) u^2 + zeta u,
/// s = Q^2/4mu^2, in units mu = 1. Tanh-sinh in u, one Gauss-Kronrod panel in v, outer
/// interval split at u = zeta. Throws std::domain_error unless
/// 0 < zeta < 0.1 and 0 <= s < 0.1, and std::runtime_error when the error
/// estimate exceeds 1e-10.
QuadratureResult vertex_log_integral_numeric(double zeta, double q2_over_4mu2);

/// Closed form -1 + zeta + (2/3) s (1 - zeta) of the same integral (ln mu^2 = 0).
double vertex_log_integral_closed(double zeta, double q2_over_4mu2);

struct IrIntegral {
  double exact = 0.0;         // ln(1 + lambda/zeta)
  double small_zeta_approx = 0.0;  // zeta/lambda - ln(zeta/lambda)
};

/// int_0^1 du/(u + zeta/lambda) and its small-zeta approximation.
/// Throws std::domain_error unless zeta > 0 and 0.5 < lambda < 1.5.
IrIntegral ir_integral_check(double zeta, double lambda);

struct SelfEnergyConsistency {
  double exact_dmu = 0.0;   // (A/mu + B)/(1 - B) at p^2 = mu^2(1 - zeta)
  double approx_dmu = 0.0;  // leading-order closed form
};

/// Throws std::domain_error unless 1e-6 < zeta < 0.1.
SelfEnergyConsistency self_energy_consistency(double alpha, double zeta);

struct TwoParticleEnergies {
  double exact = 0.0;                 // sqrt(m1^2 + p^2) + sqrt(m2^2 + p^2)
  double case_a = 0.0;                // M + p^2/2mu - p^4/8mu^3
  std::optional<double> case_b;       // 2m + p^2/2mu - p^4/32mu^3, equal masses only
  double gap_a = 0.0;                 // exact - case_a, without cancellation against M
  std::optional<double> gap_b;
};

/// Throws std::invalid_argument for non-positive masses, negative p_r, or
/// want_case_b with m1 != m2.
TwoParticleEnergies two_particle_energy_check(double m1, double m2, double p_r, bool want_case_b = false);

/// Least-squares slope of ln|y| against ln x. Throws std::invalid_argument
/// for fewer than two points or non-positive entries.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct OraclePoint {
  double x = 0.0;      // refinement parameter
  double zeta = 0.0;
  double s = 0.0;      // secondary parameter (Q^2/4mu^2, lambda or p/mu)
  double reference = 0.0;
  double approximation = 0.0;
  double gap = 0.0;
};

struct OracleSweep {
  std::string id;
  std::string description;
  double predicted_order = 0.0;
  double slope_tolerance = 0.3;
  std::vector<OraclePoint> points;
  double fitted_slope = 0.0;
  bool passed = false;
};

/// Every refinement sweep used to check closed forms against direct evaluation.
std::vector<OracleSweep> run_oracle_sweeps(double alpha);

/// max |numeric - closed| / (zeta^2 |ln zeta| + s^2) over the grid
/// zeta in {1e-4, 1e-3, 1e-2}, s in {0, 1e-3, 1e-2}.
double vertex_gap_constant();

}  // namespace lamb
