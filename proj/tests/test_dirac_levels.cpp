#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "lamb/dirac_levels.hpp"
#include "oracles/reference_values.hpp"

using namespace lamb;

TEST_CASE("state parsing and labels") {
  CHECK(QuantumState::parse("2S1/2") == QuantumState(2, 0, 1));
  CHECK(QuantumState::parse("2S") == QuantumState(2, 0, 1));
  CHECK(QuantumState::parse("4d5/2") == QuantumState(4, 2, 5));
  CHECK(QuantumState::parse("2P3/2").label() == "2P3/2");
  CHECK(QuantumState(4, 2, 5).j() == 2.5);
  CHECK(QuantumState(4, 2, 3).j_plus_half() == 2);
  for (const char* bad : {"", "S1/2", "2X1/2", "2P", "2P1/3", "2P1/2x", "1P1/2", "2S3/2"})
    CHECK_THROWS_AS(QuantumState::parse(bad), std::invalid_argument);
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(QuantumState(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState(2, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState(2, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState(1, 0, -1), std::invalid_argument);
}

TEST_CASE("atoms") {
  const auto c = builtin_constants();
  CHECK(atom_by_label(c, "He+").Z == 2);
  CHECK(atom_by_label(c, "He").b == c.b_He);
  CHECK(atom_by_label(c, "D").r_N_fm == c.r_d_fm);
  CHECK_THROWS_AS(atom_by_label(c, "Li"), std::invalid_argument);
  AtomSpec heavy{"X", 200, 1e-4, 1.0};
  CHECK_THROWS_AS(heavy.validate(c.alpha), std::invalid_argument);
}

TEST_CASE("f - 1 against the high-precision oracle") {
  const double a = builtin_constants().alpha;
  CHECK(dirac_f_minus_one(QuantumState(1, 0, 1), a) == doctest::Approx(oracle::kFm1_H_1S).epsilon(1e-14));
  CHECK(dirac_f_minus_one(QuantumState(2, 0, 1), a) == doctest::Approx(oracle::kFm1_H_2S).epsilon(1e-14));
  CHECK(dirac_f_minus_one(QuantumState(2, 1, 3), a) == doctest::Approx(oracle::kFm1_H_2P3).epsilon(1e-14));
  CHECK(dirac_f_minus_one(QuantumState(4, 2, 5), a) == doctest::Approx(oracle::kFm1_H_4D5).epsilon(1e-14));
  CHECK(dirac_f_minus_one(QuantumState(1, 0, 1), 92 * a) == doctest::Approx(oracle::kFm1_Z92_1S).epsilon(1e-14));
  const double d = dirac_f_minus_one(QuantumState(2, 0, 1), a) - dirac_f_minus_one(QuantumState(1, 0, 1), a);
  CHECK(d == doctest::Approx(oracle::kF2minusF1).epsilon(1e-13));
}

TEST_CASE("f depends on n and j only") {
  const double a = builtin_constants().alpha;
  CHECK(dirac_f(QuantumState(2, 0, 1), a) == dirac_f(QuantumState(2, 1, 1), a));
  CHECK(dirac_f(QuantumState(3, 1, 3), a) == dirac_f(QuantumState(3, 2, 3), a));
}

TEST_CASE("property: series agrees with exact f up to (Z alpha)^8") {
  const double a = builtin_constants().alpha;
  for (int Z : {1, 2, 10, 30})
    for (int n = 1; n <= 5; ++n)
      for (int l = 0; l < n; ++l)
        for (int two_j : {2 * l - 1, 2 * l + 1}) {
          if (two_j <= 0) continue;
          const QuantumState s(n, l, two_j);
          const double za = Z * a;
          const double gap = std::abs(dirac_f_series_minus_one(s, za) - dirac_f_minus_one(s, za));
          // omitted term, with 10% for the tail, plus rounding of f - 1
          const double bound = 1.1 * dirac_f_series_next_term(s, za) +
                               8.0 * std::numeric_limits<double>::epsilon() * std::abs(dirac_f_minus_one(s, za));
          CHECK(gap <= bound);
        }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(dirac_f(QuantumState(1, 0, 1), 1.0), std::domain_error);
  CHECK_THROWS_AS(dirac_f(QuantumState(1, 0, 1), -0.1), std::domain_error);
  CHECK_THROWS_AS(dirac_f(QuantumState(2, 1, 3), 2.0), std::domain_error);
  CHECK_NOTHROW(dirac_f(QuantumState(2, 1, 3), 1.5));
}

TEST_CASE("reduced-mass level and the D-H mass factor") {
  const auto c = builtin_constants();
  const auto h = hydrogen(c), d = deuterium(c);
  CHECK(rde_level_hz(c, h, QuantumState(1, 0, 1)) < 0.0);
  const double factor = (reduced_mass_hz(c, d) - reduced_mass_hz(c, h)) / c.m_e_hz;
  CHECK(factor == doctest::Approx(2.719511528e-4).epsilon(1e-9));
}
