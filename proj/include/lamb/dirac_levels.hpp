#pragma once

#include <string>
#include <string_view>

#include "lamb/constants.hpp"

namespace lamb {

/// Bound-state quantum numbers (n, l, j). j is half-integer and is stored as
/// two_j = 2j so that j = l +- 1/2 is exact.
class QuantumState {
 public:
  /// Throws std::invalid_argument unless n >= 1, 0 <= l <= n-1 and
  /// |two_j - 2l| == 1.
  QuantumState(int n, int l, int two_j);

  /// Parses spectroscopic labels such as "2S1/2", "4D5/2" or "2p3/2".
  static QuantumState parse(std::string_view label);

  int n() const { return n_; }
  int l() const { return l_; }
  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  /// j + 1/2, always a positive integer.
  int j_plus_half() const { return (two_j_ + 1) / 2; }
  bool is_s_state() const { return l_ == 0; }

  std::string label() const;

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  int n_;
  int l_;
  int two_j_;
};

/// A hydrogenlike species: nuclear charge, m_e/m_N and nuclear charge radius.
struct AtomSpec {
  std::string label;
  int Z = 1;
  double b = 0.0;  // m_e / m_N
  double r_N_fm = 0.0;

  /// Throws std::invalid_argument unless 0 < b < 1 and Z*alpha < 1.
  void validate(double alpha) const;
};

AtomSpec hydrogen(const PhysicalConstants& c);
AtomSpec deuterium(const PhysicalConstants& c);
AtomSpec helium_ion(const PhysicalConstants& c);
/// "H", "D" or "He+" (also "He"); throws std::invalid_argument otherwise.
AtomSpec atom_by_label(const PhysicalConstants& c, std::string_view label);

/// Exact point-Coulomb Dirac factor f(n, j) with E_nj = m f(n, j).
/// Throws std::domain_error when (j+1/2)^2 <= (Z alpha)^2 or n < j + 1/2.
double dirac_f(const QuantumState& s, double z_alpha);

/// f(n, j) - 1 evaluated without cancellation against the leading 1.
double dirac_f_minus_one(const QuantumState& s, double z_alpha);

/// Expansion of f(n, j) through (Z alpha)^6.
double dirac_f_series(const QuantumState& s, double z_alpha);
double dirac_f_series_minus_one(const QuantumState& s, double z_alpha);
/// |c4| (Z alpha)^8, the first term the series above leaves out, with
/// c4 = (35k^5 - 120k^4 n + 120k^3 n^2 - 8k^2 n^3 - 24k n^4 - 8n^5)/(128 k^5 n^8), k = j + 1/2.
double dirac_f_series_next_term(const QuantumState& s, double z_alpha);

/// Reduced mass m_e/(1 + b) in Hz.
double reduced_mass_hz(const PhysicalConstants& c, const AtomSpec& atom);

/// Reduced-Dirac-equation level mu [f(n, j) - 1] in Hz; never positive.
double rde_level_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s);

}  // namespace lamb
