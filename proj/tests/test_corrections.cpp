#include "doctest.h"
#include "lamb/corrections.hpp"
#include "oracles/reference_values.hpp"

using namespace lamb;

TEST_CASE("recoil and nuclear size against the oracle") {
  const auto c = builtin_constants();
  const auto h = hydrogen(c), he = helium_ion(c);
  CHECK(recoil1_hz(c, h, QuantumState(1, 0, 1)) == doctest::Approx(oracle::kRecoil1_H_1S).epsilon(1e-13));
  CHECK(recoil2_hz(c, h, QuantumState(2, 1, 1)) == doctest::Approx(oracle::kRecoil2_H_2P1).epsilon(1e-13));
  CHECK(recoil2_hz(c, h, QuantumState(4, 2, 5)) == doctest::Approx(oracle::kRecoil2_H_4D5).epsilon(1e-13));
  CHECK(nuclear_size_hz(c, h, QuantumState(2, 0, 1)) == doctest::Approx(oracle::kNs_H_2S).epsilon(1e-13));
  CHECK(nuclear_size_hz(c, he, QuantumState(2, 0, 1)) == doctest::Approx(oracle::kNs_He_2S).epsilon(1e-13));
}

TEST_CASE("selection rules and signs") {
  const auto c = builtin_constants();
  const auto h = hydrogen(c);
  CHECK(recoil2_hz(c, h, QuantumState(3, 0, 1)) == 0.0);
  CHECK(nuclear_size_hz(c, h, QuantumState(3, 1, 1)) == 0.0);
  CHECK(nuclear_size_hz(c, h, QuantumState(3, 2, 5)) == 0.0);
  for (int n = 1; n <= 4; ++n) CHECK(recoil1_hz(c, h, QuantumState(n, 0, 1)) < 0.0);
  // 1/(j+1/2) - 1/(l+1/2) is negative for j = l + 1/2 and positive for j = l - 1/2
  CHECK(recoil2_hz(c, h, QuantumState(2, 1, 3)) < 0.0);
  CHECK(recoil2_hz(c, h, QuantumState(2, 1, 1)) > 0.0);
}

TEST_CASE("nuclear size scales as Z^4/n^3 and r^2") {
  const auto c = builtin_constants();
  auto h = hydrogen(c);
  const double s1 = nuclear_size_hz(c, h, QuantumState(1, 0, 1));
  CHECK(nuclear_size_hz(c, h, QuantumState(2, 0, 1)) == doctest::Approx(s1 / 8).epsilon(1e-15));
  CHECK(s1 == doctest::Approx(1.16202775e6).epsilon(1e-8));
  h.r_N_fm *= 2;
  CHECK(nuclear_size_hz(c, h, QuantumState(1, 0, 1)) == doctest::Approx(4 * s1).epsilon(1e-15));
  h.r_N_fm = 0.0;
  CHECK(nuclear_size_hz(c, h, QuantumState(1, 0, 1)) == 0.0);
}
