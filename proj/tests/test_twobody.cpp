#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lamb/constants.hpp"
#include "lamb/twobody.hpp"
#include "oracles/reference_values.hpp"

using namespace lamb;

namespace {
const PhysicalConstants kC = builtin_constants();
}

TEST_CASE("system invariants") {
  const TwoBodySystem hyd{kC.m_e_hz, kC.m_e_hz / kC.b_H, 1.0};
  CHECK(hyd.reduced_mass() <= std::min(hyd.m1, hyd.m2));
  const auto ps = charge_conjugate_pair(kC.m_e_hz, 1.0);
  CHECK(ps.reduced_mass() == doctest::Approx(ps.total_mass() / 4).epsilon(1e-15));
  CHECK_THROWS_AS((TwoBodySystem{0.0, 1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((TwoBodySystem{1.0, 1.0, 0.0}).validate(), std::invalid_argument);
}

TEST_CASE("Coulomb eigenvalues") {
  const TwoBodySystem hyd{kC.m_e_hz, kC.m_e_hz / kC.b_H, 1.0};
  const double e1 = coulomb_epsilon(hyd, kC.alpha, 1);
  CHECK(e1 == doctest::Approx(-kC.alpha * kC.alpha * hyd.reduced_mass() / 2).epsilon(1e-15));
  CHECK(coulomb_epsilon(hyd, kC.alpha, 3) == doctest::Approx(e1 / 9).epsilon(1e-15));
  CHECK_THROWS_AS(coulomb_epsilon(hyd, kC.alpha, 0), std::invalid_argument);
}

TEST_CASE("energy mapping") {
  const auto ps = charge_conjugate_pair(kC.m_e_hz, 1.0);
  const double M = ps.total_mass();
  CHECK(total_energy(ps, 0.0).energy == M);
  CHECK(total_energy(ps, 0.0).binding == 0.0);
  const auto bottom = total_energy(ps, -M / 2);
  CHECK(bottom.energy == 0.0);
  CHECK(bottom.binding == M);
  CHECK_THROWS_AS(total_energy(ps, -0.51 * M), std::domain_error);
  const double eps = -1e-6 * M;
  const double series = -eps + eps * eps / (2 * M);
  CHECK(total_energy(ps, eps).binding == doctest::Approx(series).epsilon(1e-12));
  double prev = -1.0;
  for (double t = -0.5; t <= 0.0; t += 0.05) {
    const auto e = total_energy(ps, t * M);
    CHECK(e.energy > prev);
    CHECK(e.binding >= 0.0);
    CHECK(e.binding <= M);
    prev = e.energy;
  }
}

TEST_CASE("strong-coupling bound") {
  const double z = strong_coupling_zmax(kC.alpha);
  CHECK(z == doctest::Approx(oracle::kZmax).epsilon(1e-14));
  CHECK(std::abs(z - 16.555) < 1e-3);
  CHECK(z == doctest::Approx(std::sqrt(2 / kC.alpha)).epsilon(1e-15));
  const auto ps = charge_conjugate_pair(kC.m_e_hz, z);
  const double eps = coulomb_epsilon(ps, kC.alpha, 1);
  CHECK(eps == doctest::Approx(-ps.total_mass() / 2).epsilon(1e-12));
  CHECK(std::abs(total_energy(ps, eps).energy) <= 1e-10 * ps.total_mass());
}
