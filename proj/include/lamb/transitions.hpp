#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lamb/constants.hpp"
#include "lamb/dirac_levels.hpp"
#include "lamb/self_energy.hpp"

namespace lamb {

using Rational = boost::rational<std::int64_t>;

/// Parses "1", "-5/4", "+1/4". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

struct ComboTerm {
  Rational coefficient{1};
  AtomSpec atom;
  QuantumState state{1, 0, 1};
};

/// A linear combination sum_i c_i E_{atom_i}(state_i) with exact coefficients.
struct TransitionCombo {
  std::vector<ComboTerm> terms;

  TransitionCombo& add(Rational coefficient, const AtomSpec& atom, const QuantumState& state);
  std::string label() const;
};

/// E(upper) - E(lower) for one atom.
TransitionCombo difference(const AtomSpec& atom, const QuantumState& upper, const QuantumState& lower);
/// [E_D(upper) - E_D(lower)] - [E_H(upper) - E_H(lower)].
TransitionCombo isotope_difference(const AtomSpec& heavy, const AtomSpec& light, const QuantumState& upper,
                                   const QuantumState& lower);
/// E(top) - (5/4) E(2S1/2) + (1/4) E(1S1/2).
TransitionCombo hyper_lamb_combo(const AtomSpec& atom, const QuantumState& top);

/// Parses "[ATOM:]STATE[@COEF]", e.g. "2S1/2", "D:2S@-1", "H:1S1/2@1/4".
ComboTerm parse_combo_term(const PhysicalConstants& c, std::string_view text, const AtomSpec& default_atom);

/// The five correction channels of a level or a combination, in Hz.
struct Channels {
  double rde_hz = 0.0;
  double recoil1_hz = 0.0;
  double recoil2_hz = 0.0;
  double rad_hz = 0.0;
  double ns_hz = 0.0;
  double total_hz = 0.0;
};

struct LevelBreakdown : Channels {
  ZetaScheme scheme = ZetaScheme::SelfEnergy;
  double zeta_used = 0.0;
};

/// All five terms of one level, with zeta = zeta(scheme, Z, n).
LevelBreakdown level_breakdown(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& state,
                               ZetaScheme scheme);

struct TransitionResult {
  Channels channels;
  std::vector<LevelBreakdown> levels;  // aligned with combo.terms
};

TransitionResult evaluate_transition(const PhysicalConstants& c, const TransitionCombo& combo, ZetaScheme scheme);

/// 2S1/2 - 2P1/2: radiative difference + NS(2S) - recoil2(2P1/2).
TransitionResult classic_lamb(const PhysicalConstants& c, const AtomSpec& atom, ZetaScheme scheme);

struct AbsoluteLamb1S {
  ZetaScheme scheme = ZetaScheme::Virial;
  double lamb_2s_hz = 0.0;     // measured 2S-2P plus computed 2P1/2 terms
  double lamb_4d52_hz = 0.0;   // radiative shift of 4D5/2
  double empirical_hz = 0.0;   // from the measured 4D5/2 hyper-Lamb combination
  double rad_1s_hz = 0.0;
  double ns_1s_hz = 0.0;
  double theoretical_hz = 0.0;  // rad(1S) + NS(1S)
};

/// Hydrogen 1S Lamb shift extracted from the measured
/// E(4D5/2) - (5/4)E(2S) + (1/4)E(1S) and the measured classic Lamb shift.
AbsoluteLamb1S absolute_lamb_1s(const PhysicalConstants& c, ZetaScheme scheme);

}  // namespace lamb
