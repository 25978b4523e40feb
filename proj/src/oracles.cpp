#include "lamb/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lamb/self_energy.hpp"

namespace lamb {

namespace {

using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::tanh_sinh;

constexpr double kQuadTolerance = 1e-13;

// int_0^1 log1p(-q t^2) dt for 0 <= q < 0.1. The integrand is analytic well
// beyond [0, 1], so one Kronrod panel is exact to rounding; the Gauss/Kronrod
// difference is still returned as the error estimate.
double inner_log1p(double q, double& err) {
  if (q == 0.0) {
    err = 0.0;
    return 0.0;
  }
  double e = 0.0;
  const double v = gauss_kronrod<double, 31>::integrate([q](double t) { return std::log1p(-q * t * t); }, 0.0,
                                                        1.0, 0, 0.0, &e);
  err = e;
  return v;
}

}  // namespace

QuadratureResult vertex_log_integral_numeric(double zeta, double s) {
  if (!(zeta > 0.0 && zeta < 0.1)) throw std::domain_error("vertex_log_integral: zeta must lie in (0, 0.1)");
  if (!(s >= 0.0 && s < 0.1)) throw std::domain_error("vertex_log_integral: Q^2/4mu^2 must lie in [0, 0.1)");
  double inner_err_max = 0.0;
  // The v-integral is 2u ln a + 2u int_0^1 log1p(-(s u^2/a) t^2) dt.
  const auto outer = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double a = (1.0 - zeta + s) * u * u + zeta * u;
    double err = 0.0;
    const double tail = inner_log1p(s * u * u / a, err);
    inner_err_max = std::max(inner_err_max, 2.0 * u * err);
    return 2.0 * u * (std::log(a) + tail);
  };
  QuadratureResult r;
  // u ln u at the origin and the ln(u + zeta) knee both sit at panel ends,
  // where tanh-sinh clusters its nodes.
  thread_local tanh_sinh<double> ts;
  double e1 = 0.0;
  double e2 = 0.0;
  r.value = ts.integrate(outer, 0.0, zeta, kQuadTolerance, &e1) + ts.integrate(outer, zeta, 1.0, kQuadTolerance, &e2);
  r.error_estimate = e1 + e2 + inner_err_max;
  if (!(r.error_estimate <= 1e-10))
    throw std::runtime_error("vertex_log_integral: quadrature did not converge, error estimate " +
                             std::to_string(r.error_estimate));
  return r;
}

double vertex_log_integral_closed(double zeta, double s) { return -1.0 + zeta + 2.0 / 3.0 * s * (1.0 - zeta); }

IrIntegral ir_integral_check(double zeta, double lambda) {
  if (!(zeta > 0.0)) throw std::domain_error("ir_integral_check: zeta must be positive");
  if (!(lambda > 0.5 && lambda < 1.5)) throw std::domain_error("ir_integral_check: lambda must lie in (0.5, 1.5)");
  const double c = zeta / lambda;
  return {std::log1p(1.0 / c), c - std::log(c)};
}

SelfEnergyConsistency self_energy_consistency(double alpha, double zeta) {
  if (!(zeta > 1e-6 && zeta < 0.1)) throw std::domain_error("self_energy_consistency: zeta must lie in (1e-6, 0.1)");
  return {self_energy_terms_at_zeta(alpha, zeta).delta_mu_over_mu, delta_mu_approx(alpha, zeta)};
}

TwoParticleEnergies two_particle_energy_check(double m1, double m2, double p, bool want_case_b) {
  if (!(m1 > 0.0 && m2 > 0.0)) throw std::invalid_argument("two_particle_energy_check: masses must be positive");
  if (!(p >= 0.0)) throw std::invalid_argument("two_particle_energy_check: p_r must be >= 0");
  if (want_case_b && m1 != m2) throw std::invalid_argument("two_particle_energy_check: equal-mass expansion needs m1 == m2");
  const double M = m1 + m2;
  const double mu = m1 * m2 / M;
  const double p2 = p * p;
  const double p4 = p2 * p2;
  const auto kinetic = [p2](double m) { return p2 / (std::sqrt(m * m + p2) + m); };
  const double exact_kin = kinetic(m1) + kinetic(m2);
  const double a_kin = p2 / (2.0 * mu) - p4 / (8.0 * mu * mu * mu);
  TwoParticleEnergies out;
  out.exact = M + exact_kin;
  out.case_a = M + a_kin;
  out.gap_a = exact_kin - a_kin;
  if (want_case_b) {
    const double b_kin = p2 / (2.0 * mu) - p4 / (32.0 * mu * mu * mu);
    out.case_b = M + b_kin;
    out.gap_b = exact_kin - b_kin;
  }
  return out;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_loglog_slope: need >= 2 paired points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || y[i] == 0.0 || !std::isfinite(y[i]))
      throw std::invalid_argument("fit_loglog_slope: entries must be positive and finite");
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

OracleSweep make_sweep(std::string id, std::string description, double order) {
  OracleSweep sw;
  sw.id = std::move(id);
  sw.description = std::move(description);
  sw.predicted_order = order;
  return sw;
}

void finish(OracleSweep& sw) {
  std::vector<double> xs, ys;
  for (const auto& p : sw.points) {
    xs.push_back(p.x);
    ys.push_back(p.gap);
  }
  sw.fitted_slope = fit_loglog_slope(xs, ys);
  sw.passed = std::abs(sw.fitted_slope - sw.predicted_order) <= sw.slope_tolerance;
}

OraclePoint vertex_point(double x, double zeta, double s) {
  OraclePoint p{x, zeta, s, vertex_log_integral_numeric(zeta, s).value, vertex_log_integral_closed(zeta, s), 0.0};
  p.gap = p.reference - p.approximation;
  return p;
}

}  // namespace

std::vector<OracleSweep> run_oracle_sweeps(double alpha) {
  std::vector<OracleSweep> out;

  {
    auto sw = make_sweep("vertex_zeta", "vertex log integral, Q^2 = 0, refine zeta", 2.0);
    for (double z : {1e-4, 1e-3, 1e-2}) sw.points.push_back(vertex_point(z, z, 0.0));
    finish(sw);
    out.push_back(sw);
  }
  {
    auto sw = make_sweep("vertex_q2", "vertex log integral, zeta = 1e-9, refine Q^2/4mu^2", 2.0);
    for (double s : {1e-4, 1e-3, 1e-2}) sw.points.push_back(vertex_point(s, 1e-9, s));
    finish(sw);
    out.push_back(sw);
  }
  {
    auto sw = make_sweep("vertex_diagonal", "vertex log integral, zeta = Q^2/4mu^2 = t", 2.0);
    for (double t : {1e-4, 1e-3, 1e-2}) sw.points.push_back(vertex_point(t, t, t));
    finish(sw);
    out.push_back(sw);
  }
  {
    auto sw = make_sweep("ir_integral", "infrared integral, lambda = 1, refine zeta", 2.0);
    for (double z : {1e-4, 1e-3, 1e-2}) {
      const auto r = ir_integral_check(z, 1.0);
      sw.points.push_back({z, z, 1.0, r.exact, r.small_zeta_approx, r.exact - r.small_zeta_approx});
    }
    finish(sw);
    out.push_back(sw);
  }
  {
    auto sw = make_sweep("mass_increment", "mass increment, exact vs leading order, refine zeta", 2.0);
    for (double z : {1e-5, 1e-4, 1e-3}) {
      const auto r = self_energy_consistency(alpha, z);
      sw.points.push_back({z, z, 0.0, r.exact_dmu, r.approx_dmu, r.exact_dmu - r.approx_dmu});
    }
    finish(sw);
    out.push_back(sw);
  }
  {
    auto sw = make_sweep("two_particle_a", "two-particle energy, m2/m1 = 1836, refine p/m1", 4.0);
    for (double p : {1e-3, 3e-3, 1e-2, 3e-2}) {
      const auto r = two_particle_energy_check(1.0, 1836.0, p);
      sw.points.push_back({p, 0.0, p, r.exact, r.case_a, r.gap_a});
    }
    finish(sw);
    out.push_back(sw);
  }
  {
    // The equal-mass expansion is exact through p^4, so the gap starts at p^6.
    auto sw = make_sweep("two_particle_b", "two-particle energy, m1 = m2, refine p/m", 6.0);
    for (double p : {1e-2, 3e-2, 1e-1}) {
      const auto r = two_particle_energy_check(1.0, 1.0, p, true);
      sw.points.push_back({p, 0.0, p, r.exact, *r.case_b, *r.gap_b});
    }
    finish(sw);
    out.push_back(sw);
  }
  return out;
}

double vertex_gap_constant() {
  double worst = 0.0;
  for (double z : {1e-4, 1e-3, 1e-2})
    for (double s : {0.0, 1e-3, 1e-2}) {
      const double gap = vertex_log_integral_numeric(z, s).value - vertex_log_integral_closed(z, s);
      worst = std::max(worst, std::abs(gap) / (z * z * std::abs(std::log(z)) + s * s));
    }
  return worst;
}

}  // namespace lamb
