#pragma once

#include "lamb/constants.hpp"
#include "lamb/dirac_levels.hpp"

namespace lamb {

// Nuclear-size shift  (4/3) (mu/m_e)^3 (Z^4/n^3) (r_N/a_inf)^2 R_inf  for S states.
// With R_inf = 3.28984124e15 Hz and a_inf = 52917.725 fm the prefactor
// (4/3) R_inf (1e4 fm / a_inf-in-1e4-fm)^2 becomes the two literals below:
// 4/3 * 3.28984124e15 Hz * 1e-8 = 4.386454987e7 Hz, divisor 5.2917725.
// They are kept verbatim so the shift reproduces the tabulated digits.
inline constexpr double kNuclearSizeCoefficientHz = 4.386454987e7;

/// First recoil term  -m_e b/(2(1+b)^3) [f(n,j) - 1]^2, never positive.
double recoil1_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s);

/// Second recoil term (Z alpha)^4 mu^3/(2 n^3 m_N^2) (1/(j+1/2) - 1/(l+1/2)),
/// zero for S states. m_N is m_e/b.
double recoil2_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s);

/// Finite-nuclear-size shift, zero unless l = 0.
double nuclear_size_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s);

}  // namespace lamb
