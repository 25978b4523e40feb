#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lamb {

/// Physical constants in the "energy as frequency" convention: every energy
/// is E/h in Hz, so the electron rest energy is m_e c^2/h = 1.2355897e20 Hz.
///
/// The built-in set is the mid-1990s constant set (alpha^-1 = 137.03599944,
/// r_p = 0.862 fm, r_d = 2.115 fm). These are not current CODATA values; the
/// proton and deuteron charge radii in particular differ from modern
/// determinations (0.841 fm, 2.128 fm). They are kept so that level
/// differences can be compared digit by digit with the published tables.
struct PhysicalConstants {
  std::string name = "builtin";

  double alpha_inverse = 0.0;
  double alpha = 0.0;           // always 1/alpha_inverse
  double m_e_hz = 0.0;          // m_e c^2 / h
  double rydberg_inf_hz = 0.0;  // R_inf c, printed value
  double b_H = 0.0;             // m_e/m_p
  double b_D = 0.0;             // m_e/m_d
  double b_He = 0.0;            // m_e/m_alpha
  double r_p_fm = 0.0;
  double r_d_fm = 0.0;
  double r_alpha_fm = 0.0;
  double bohr_radius_ref = 0.0;  // a_inf in units of 1e4 fm
  double g_electron = 0.0;       // full gyromagnetic ratio, g ~ 2.0023

  /// Throws std::invalid_argument when a field violates its domain.
  void validate() const;
};

/// The built-in constant set. Never consults an external database.
PhysicalConstants builtin_constants();

/// Reads a JSON object whose keys mirror the PhysicalConstants field names and
/// applies them on top of `base`. Absent keys keep the base value. `alpha`
/// is derived and may not be set directly; unknown keys are rejected.
PhysicalConstants load_constants_override(const std::filesystem::path& file,
                                          PhysicalConstants base = builtin_constants());

/// Same as load_constants_override but from an in-memory JSON document.
PhysicalConstants apply_constants_override(std::string_view json_text,
                                           PhysicalConstants base,
                                           std::string_view set_name);

struct ExperimentRecord {
  std::string id;
  double value_hz = 0.0;
  double uncertainty_hz = 0.0;  // 0 when no uncertainty is quoted
  std::string source;           // original measurement / compilation
};

const std::vector<ExperimentRecord>& reference_experiments();

/// Throws std::out_of_range for an unknown id.
const ExperimentRecord& lookup_experiment(std::string_view id);

}  // namespace lamb
