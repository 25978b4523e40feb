#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "lamb/dirac_levels.hpp"
#include "lamb/noncovariant.hpp"
#include "oracles/reference_values.hpp"

using namespace lamb;

namespace {
const PhysicalConstants kC = builtin_constants();
const double kMu = reduced_mass_hz(kC, hydrogen(kC));
}

TEST_CASE("coefficients against the oracle") {
  const auto k = noncov_coefficients(kC, kMu);
  CHECK(k.beta == doctest::Approx(oracle::kNoncovBeta).epsilon(1e-14));
  CHECK(k.in_alpha_over_pi_m3(k.b2_1, kMu) == doctest::Approx(-2.0 / 15.0).epsilon(1e-14));
  CHECK(k.in_alpha_over_pi_m3(k.b2_2, kMu) == doctest::Approx(-kC.g_electron * kC.g_electron / 60.0).epsilon(1e-14));
  CHECK(k.in_alpha_over_pi_m3(k.b2_leading, kMu) == doctest::Approx(oracle::kNoncovB2LeadingUnits).epsilon(1e-13));
  CHECK(k.in_alpha_over_pi_m3(k.b2_renormalized, k.mu_obs_hz()) ==
        doctest::Approx(oracle::kNoncovB2FullUnitsMuObs).epsilon(1e-13));
  CHECK(k.b1_2 == doctest::Approx(k.beta / (2 * kMu)));
  CHECK(k.mu_obs_over_mu == doctest::Approx(1.0 / (1.0 + k.beta)).epsilon(1e-15));
}

TEST_CASE("invariants") {
  const auto k = noncov_coefficients(kC, kMu);
  CHECK(k.mu_obs_hz() < kMu);
  CHECK(k.b2_renormalized > 0.0);
  // background subtraction equals (1/8)(1/mu_obs^3 - 1/mu^3)
  const double bg = k.b2_renormalized - k.b2_1 - k.b2_2;
  const double mo = k.mu_obs_hz();
  CHECK(bg == doctest::Approx((1.0 / (mo * mo * mo) - 1.0 / (kMu * kMu * kMu)) / 8.0).epsilon(1e-12));
  const auto off = noncov_coefficients_without_spin_mass(kC, kMu);
  CHECK(off.b2_renormalized == off.b2_1 + off.b2_2);
  CHECK(off.mu_obs_over_mu == 1.0);
  CHECK_THROWS_AS(noncov_coefficients(kC, 0.0), std::domain_error);
}

TEST_CASE("p^4 angular bracket") {
  using R = boost::rational<std::int64_t>;
  CHECK(p4_bracket(2, 0) == R(13));
  CHECK(p4_bracket(2, 1) == R(7, 3));
  CHECK(p4_bracket(1, 0) == R(5));
  CHECK(p4_bracket(3, 2) == R(9, 5));
  CHECK_THROWS_AS(p4_bracket(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(p4_bracket(0, 0), std::invalid_argument);
}

TEST_CASE("shift scaling") {
  const double b2 = 1e-60;
  const double s = noncov_rad_shift_hz(kC.alpha, 1, 2, 0, b2, kMu);
  CHECK(noncov_rad_shift_hz(kC.alpha, 2, 2, 0, b2, kMu) == doctest::Approx(16 * s).epsilon(1e-14));
  CHECK(noncov_rad_shift_hz(kC.alpha, 1, 4, 0, b2, kMu) / noncov_rad_shift_hz(kC.alpha, 1, 2, 0, b2, kMu) ==
        doctest::Approx((32.0 - 3.0) / 256.0 / (13.0 / 16.0)).epsilon(1e-14));
}

TEST_CASE("2S - 2P composition") {
  const auto lo = noncov_classic_lamb(kC, NoncovOrder::Leading);
  CHECK(lo.total_hz == doctest::Approx(oracle::kNoncovLambLeading).epsilon(1e-12));
  CHECK(lo.uehling_hz == doctest::Approx(oracle::kNoncovUehling2S).epsilon(1e-12));
  CHECK(std::abs(lo.uehling_hz) == doctest::Approx(27e6).epsilon(0.01));
  CHECK(lo.total_hz == doctest::Approx(lo.self_energy_hz + lo.uehling_hz + lo.nuclear_size_hz));
  const auto full = noncov_classic_lamb(kC, NoncovOrder::Full);
  CHECK(full.mass_hz < lo.mass_hz);
  CHECK(order_label(NoncovOrder::Full) == "full");
  // monotone in b2
  const double d = noncov_rad_shift_hz(kC.alpha, 1, 2, 0, 2.0, kMu) - noncov_rad_shift_hz(kC.alpha, 1, 2, 1, 2.0, kMu);
  CHECK(d > noncov_rad_shift_hz(kC.alpha, 1, 2, 0, 1.0, kMu) - noncov_rad_shift_hz(kC.alpha, 1, 2, 1, 1.0, kMu));
}
