#include "lamb/constants.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lamb {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("constants: ") + what);
}

bool is_ratio(double b) { return std::isfinite(b) && b > 0.0 && b < 1.0; }
bool is_radius(double r) { return std::isfinite(r) && r >= 0.0; }

}  // namespace

void PhysicalConstants::validate() const {
  require(std::isfinite(alpha_inverse) && alpha_inverse > 1.0, "alpha_inverse must exceed 1");
  require(alpha == 1.0 / alpha_inverse, "alpha must equal 1/alpha_inverse");
  require(std::isfinite(m_e_hz) && m_e_hz > 0.0, "m_e_hz must be positive");
  require(std::isfinite(rydberg_inf_hz) && rydberg_inf_hz > 0.0, "rydberg_inf_hz must be positive");
  require(is_ratio(b_H) && is_ratio(b_D) && is_ratio(b_He), "mass ratios must lie in (0, 1)");
  require(is_radius(r_p_fm) && is_radius(r_d_fm) && is_radius(r_alpha_fm), "radii must be >= 0");
  require(std::isfinite(bohr_radius_ref) && bohr_radius_ref > 0.0, "bohr_radius_ref must be positive");
  require(std::isfinite(g_electron) && g_electron > 0.0, "g_electron must be positive");
}

PhysicalConstants builtin_constants() {
  PhysicalConstants c;
  c.name = "builtin";
  c.alpha_inverse = 137.03599944;
  c.alpha = 1.0 / c.alpha_inverse;
  c.m_e_hz = 1.2355897e20;
  c.rydberg_inf_hz = 3.28984124e15;
  // The printed ratio is used rather than 1/1836.1526665; the two differ in
  // the ninth digit and the printed one is what the level tables were built on.
  c.b_H = 5.446170255e-4;
  c.b_D = 2.724436319e-4;
  c.b_He = 0.0001371;
  c.r_p_fm = 0.862;
  c.r_d_fm = 2.115;
  c.r_alpha_fm = 1.2;
  c.bohr_radius_ref = 5.2917725;
  c.g_electron = 2.0 * 1.0011596522;
  return c;
}

PhysicalConstants apply_constants_override(std::string_view json_text, PhysicalConstants base,
                                           std::string_view set_name) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_object()) throw std::invalid_argument("constants override must be a JSON object");

  const std::map<std::string, double PhysicalConstants::*> fields = {
      {"alpha_inverse", &PhysicalConstants::alpha_inverse},
      {"m_e_hz", &PhysicalConstants::m_e_hz},
      {"rydberg_inf_hz", &PhysicalConstants::rydberg_inf_hz},
      {"b_H", &PhysicalConstants::b_H},
      {"b_D", &PhysicalConstants::b_D},
      {"b_He", &PhysicalConstants::b_He},
      {"r_p_fm", &PhysicalConstants::r_p_fm},
      {"r_d_fm", &PhysicalConstants::r_d_fm},
      {"r_alpha_fm", &PhysicalConstants::r_alpha_fm},
      {"bohr_radius_ref", &PhysicalConstants::bohr_radius_ref},
      {"g_electron", &PhysicalConstants::g_electron},
  };

  for (const auto& [key, value] : doc.items()) {
    if (key == "alpha")
      throw std::invalid_argument("constants override: 'alpha' is derived, set 'alpha_inverse'");
    const auto it = fields.find(key);
    if (it == fields.end())
      throw std::invalid_argument("constants override: unknown key '" + key + "'");
    if (!value.is_number())
      throw std::invalid_argument("constants override: '" + key + "' must be a number");
    base.*(it->second) = value.get<double>();
  }
  base.alpha = 1.0 / base.alpha_inverse;
  base.name = std::string(set_name);
  base.validate();
  return base;
}

PhysicalConstants load_constants_override(const std::filesystem::path& file, PhysicalConstants base) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open constants file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto name = base.name + "+" + file.filename().string();
  return apply_constants_override(buf.str(), std::move(base), name);
}

const std::vector<ExperimentRecord>& reference_experiments() {
  static const std::vector<ExperimentRecord> records = {
      {"H_1S2S", 2.46606141318734e15, 840.0, "Udem et al., PRL 79, 2646 (1997)"},
      {"HD_isotope_2S1S", 6.70994337e11, 22.0e3, "Schmidt-Kaler et al., PRL 70, 2261 (1993)"},
      {"HD_isotope_2S1S_1998", 6.7099433464e11, 0.15e3, "Huber et al., PRL 80, 468 (1998)"},
      {"H_classic_lamb", 1.057845e9, 0.0, "Weitz et al., PRA 52, 2664 (1995)"},
      {"He_classic_lamb", 1.404113e10, 0.17e6, "Eides, Grotch, Shelyuto, Phys. Rep. 342, 63 (2001)"},
      {"H_hyper_lamb_4S", 4.797338e9, 10.0e3, "Weitz et al., PRA 52, 2664 (1995)"},
      {"H_hyper_lamb_4D52", 6.490144e9, 24.0e3, "Weitz et al., PRA 52, 2664 (1995)"},
      {"H_4D52_4S", 1.692806e9, 0.0, "difference of H_hyper_lamb_4D52 and H_hyper_lamb_4S"},
      {"H_lamb_1S", 8.172874e9, 60.0e3, "Weitz et al., PRA 52, 2664 (1995)"},
      {"H_lamb_1S_theory", 8.172754e9, 35.0e3, "Eides, Grotch, Shelyuto, Phys. Rep. 342, 63 (2001)"},
  };
  return records;
}

const ExperimentRecord& lookup_experiment(std::string_view id) {
  for (const auto& r : reference_experiments())
    if (r.id == id) return r;
  throw std::out_of_range("unknown experiment id: " + std::string(id));
}

}  // namespace lamb
