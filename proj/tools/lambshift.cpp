// lambshift: hydrogenlike levels, Lamb shifts and the published comparison table.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lamb/constants.hpp"
#include "lamb/dirac_levels.hpp"
#include "lamb/noncovariant.hpp"
#include "lamb/oracles.hpp"
#include "lamb/report.hpp"
#include "lamb/self_energy.hpp"
#include "lamb/table.hpp"
#include "lamb/transitions.hpp"
#include "lamb/twobody.hpp"

namespace {

using namespace lamb;

struct Globals {
  std::string scheme = "all";
  std::string format = "table";
  std::string constants_file;
};

std::vector<ZetaScheme> selected_schemes(const std::string& s) {
  if (s == "all") return {kAllSchemes.begin(), kAllSchemes.end()};
  return {*parse_scheme(s)};
}

void add_channels(std::vector<Cell>& row, const Channels& ch) {
  for (double v : {ch.rde_hz, ch.recoil1_hz, ch.recoil2_hz, ch.rad_hz, ch.ns_hz, ch.total_hz}) row.push_back(Cell::num(v));
}

const std::vector<std::string> kChannelColumns = {"rde_hz", "recoil1_hz", "recoil2_hz", "rad_hz", "ns_hz", "total_hz"};

Table constants_table(const PhysicalConstants& c) {
  Table t;
  t.columns = {"name", "value"};
  const std::pair<const char*, double> fields[] = {
      {"alpha_inverse", c.alpha_inverse}, {"alpha", c.alpha},       {"m_e_hz", c.m_e_hz},
      {"rydberg_inf_hz", c.rydberg_inf_hz}, {"b_H", c.b_H},         {"b_D", c.b_D},
      {"b_He", c.b_He},                   {"r_p_fm", c.r_p_fm},     {"r_d_fm", c.r_d_fm},
      {"r_alpha_fm", c.r_alpha_fm},       {"bohr_radius_ref", c.bohr_radius_ref}, {"g_electron", c.g_electron}};
  t.add_row({Cell::str("set"), Cell::str(c.name)});
  for (auto [k, v] : fields) t.add_row({Cell::str(k), Cell::num(v, 15)});
  return t;
}

Table table1(const PhysicalConstants& c) {
  // Scale factors follow the published layout: S x1e4, V x1e6, S+V and SV x1e5.
  constexpr double kScale[] = {1e4, 1e6, 1e5, 1e5};
  constexpr const char* kSuffix[] = {"x1e4", "x1e6", "x1e5", "x1e5"};
  Table t;
  t.columns = {"Z2_over_n2"};
  for (std::size_t k = 0; k < kAllSchemes.size(); ++k) {
    const std::string s(scheme_label(kAllSchemes[k]));
    t.columns.push_back("zeta_" + s + "_" + kSuffix[k]);
    t.columns.push_back("minus_ln_zeta_" + s);
  }
  const char* labels[] = {"1/16", "1/4", "1"};
  const auto rows = zeta_table(c.alpha);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Cell> r{Cell::str(labels[i])};
    for (std::size_t k = 0; k < kAllSchemes.size(); ++k) {
      r.push_back(Cell::num(rows[i].zeta[k] * kScale[k], 10));
      r.push_back(Cell::num(rows[i].minus_log_zeta[k], 10));
    }
    t.add_row(std::move(r));
  }
  return t;
}

Table level_table(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s,
                  const std::vector<ZetaScheme>& schemes) {
  Table t;
  t.columns = {"atom", "state", "scheme", "zeta"};
  t.columns.insert(t.columns.end(), kChannelColumns.begin(), kChannelColumns.end());
  for (auto sch : schemes) {
    const auto b = level_breakdown(c, atom, s, sch);
    std::vector<Cell> r{Cell::str(atom.label), Cell::str(s.label()), Cell::str(std::string(scheme_label(sch))),
                        Cell::num(b.zeta_used)};
    add_channels(r, b);
    t.add_row(std::move(r));
  }
  return t;
}

Table transition_table(const PhysicalConstants& c, const TransitionCombo& combo,
                       const std::vector<ZetaScheme>& schemes) {
  Table t;
  t.columns = {"combination", "scheme"};
  t.columns.insert(t.columns.end(), kChannelColumns.begin(), kChannelColumns.end());
  for (auto sch : schemes) {
    std::vector<Cell> r{Cell::str(combo.label()), Cell::str(std::string(scheme_label(sch)))};
    add_channels(r, evaluate_transition(c, combo, sch).channels);
    t.add_row(std::move(r));
  }
  return t;
}

Table absolute_1s_table(const PhysicalConstants& c, const std::vector<ZetaScheme>& schemes) {
  Table t;
  t.columns = {"scheme", "lamb_2s_hz", "lamb_4d52_hz", "lamb_1s_empirical_hz", "rad_1s_hz", "ns_1s_hz",
               "lamb_1s_theory_hz"};
  for (auto sch : schemes) {
    const auto a = absolute_lamb_1s(c, sch);
    t.add_row({Cell::str(std::string(scheme_label(sch))), Cell::num(a.lamb_2s_hz), Cell::num(a.lamb_4d52_hz),
               Cell::num(a.empirical_hz), Cell::num(a.rad_1s_hz), Cell::num(a.ns_1s_hz), Cell::num(a.theoretical_hz)});
  }
  return t;
}

Table appendix_table(const PhysicalConstants& c) {
  const double mu = reduced_mass_hz(c, hydrogen(c));
  const auto k = noncov_coefficients(c, mu);
  Table t;
  t.columns = {"quantity", "value"};
  const auto row = [&](const char* name, double v) { t.add_row({Cell::str(name), Cell::num(v)}); };
  row("beta", k.beta);
  row("mu_obs_over_mu", k.mu_obs_over_mu);
  row("b1_2_per_hz", k.b1_2);
  row("b2_1_alpha_over_pi_mu3", k.in_alpha_over_pi_m3(k.b2_1, mu));
  row("b2_2_alpha_over_pi_mu3", k.in_alpha_over_pi_m3(k.b2_2, mu));
  row("b2_leading_alpha_over_pi_mu3", k.in_alpha_over_pi_m3(k.b2_leading, mu));
  row("b2_renormalized_alpha_over_pi_mu_obs3", k.in_alpha_over_pi_m3(k.b2_renormalized, k.mu_obs_hz()));
  for (auto order : {NoncovOrder::Leading, NoncovOrder::Full}) {
    const auto l = noncov_classic_lamb(c, order);
    const std::string p = std::string("lamb_2s_2p_") + std::string(order_label(order)) + "_";
    t.add_row({Cell::str(p + "self_energy_hz"), Cell::num(l.self_energy_hz)});
    t.add_row({Cell::str(p + "uehling_hz"), Cell::num(l.uehling_hz)});
    t.add_row({Cell::str(p + "ns_hz"), Cell::num(l.nuclear_size_hz)});
    t.add_row({Cell::str(p + "total_hz"), Cell::num(l.total_hz)});
  }
  return t;
}

Table oracle_table(const std::vector<OracleSweep>& sweeps) {
  Table t;
  t.columns = {"sweep", "x", "zeta", "secondary", "reference", "approximation", "gap", "predicted_order",
               "fitted_slope", "status"};
  for (const auto& sw : sweeps)
    for (const auto& p : sw.points)
      t.add_row({Cell::str(sw.id), Cell::num(p.x, 6), Cell::num(p.zeta, 6), Cell::num(p.s, 6), Cell::num(p.reference, 15),
                 Cell::num(p.approximation, 15), Cell::num(p.gap, 6), Cell::num(sw.predicted_order, 3),
                 Cell::num(sw.fitted_slope, 4), Cell::str(sw.passed ? "pass" : "FAIL")});
  return t;
}

Table twobody_table(const PhysicalConstants& c, double zmin, double zmax, double zstep, int n) {
  Table t;
  t.columns = {"Z", "z_eff", "epsilon_hz", "energy_hz", "binding_hz", "energy_over_M", "status"};
  const auto emit = [&](double Z, const std::string& tag) {
    const auto sys = charge_conjugate_pair(c.m_e_hz, Z);
    const double eps = coulomb_epsilon(sys, c.alpha, n);
    try {
      const auto e = total_energy(sys, eps);
      t.add_row({Cell::num(Z, 8), Cell::num(sys.z_eff, 8), Cell::num(eps), Cell::num(e.energy), Cell::num(e.binding),
                 Cell::num(e.energy / sys.total_mass(), 8), Cell::str(tag)});
    } catch (const std::domain_error&) {
      t.add_row({Cell::num(Z, 8), Cell::num(sys.z_eff, 8), Cell::num(eps), Cell::none(), Cell::none(), Cell::none(),
                 Cell::str("supercritical")});
    }
  };
  const int steps = static_cast<int>(std::floor((zmax - zmin) / zstep + 1e-9));
  for (int i = 0; i <= steps; ++i) emit(zmin + i * zstep, "bound");
  if (n == 1) emit(strong_coupling_zmax(c.alpha), "z_max");
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hydrogenlike levels and Lamb shifts from the reduced Dirac equation with off-shell one-loop QED"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--scheme", g.scheme, "zeta scheme")->check(CLI::IsMember({"S", "V", "SV", "S+V", "all"}));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--constants", g.constants_file, "JSON file overriding built-in constants")->check(CLI::ExistingFile);

  auto* constants = app.add_subcommand("constants", "print the constant set in use");

  std::string atom_label = "H";
  std::string state_label;
  auto* level = app.add_subcommand("level", "breakdown of one level");
  level->add_option("--atom", atom_label, "H, D or He+");
  level->add_option("state", state_label, "e.g. 2S1/2, 4D5/2")->required();

  std::vector<std::string> terms;
  auto* transition = app.add_subcommand("transition", "rational combination of levels");
  transition->add_option("--atom", atom_label, "default atom for terms without a prefix");
  transition->add_option("terms", terms, "[ATOM:]STATE[@COEF], e.g. 2S1/2 2P1/2@-1")->required();

  bool absolute = false;
  auto* lamb = app.add_subcommand("lamb", "classic 2S1/2 - 2P1/2 Lamb shift, or the absolute 1S shift");
  lamb->add_option("--atom", atom_label, "H, D or He+");
  lamb->add_flag("--absolute-1s", absolute, "hydrogen 1S Lamb shift from the 4D5/2 combination");

  auto* tab1 = app.add_subcommand("table1", "off-shell parameter zeta for Z^2/n^2 = 1/16, 1/4, 1");
  auto* report = app.add_subcommand("report", "every published comparison; exit 1 if a gated row fails");
  auto* appendix = app.add_subcommand("appendix", "noncovariant p^4 coefficients and the 2S - 2P value");
  auto* oracle = app.add_subcommand("oracle", "closed forms against direct evaluation; exit 1 on a failed sweep");

  double zmin = 1.0, zmax = 17.0, zstep = 1.0;
  int n_twobody = 1;
  auto* twobody = app.add_subcommand("twobody", "epsilon to E mapping for a charge-conjugate pair");
  twobody->add_option("--zmin", zmin);
  twobody->add_option("--zmax", zmax);
  twobody->add_option("--zstep", zstep)->check(CLI::PositiveNumber);
  twobody->add_option("--n", n_twobody)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version report success; every usage error exits 2
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    PhysicalConstants c = builtin_constants();
    if (!g.constants_file.empty()) c = load_constants_override(g.constants_file, c);
    const auto format = *parse_format(g.format);
    const auto schemes = selected_schemes(g.scheme);
    int status = 0;
    Table out;

    if (*constants) {
      out = constants_table(c);
    } else if (*level) {
      out = level_table(c, atom_by_label(c, atom_label), QuantumState::parse(state_label), schemes);
    } else if (*transition) {
      const AtomSpec def = atom_by_label(c, atom_label);
      TransitionCombo combo;
      for (const auto& t : terms) combo.terms.push_back(parse_combo_term(c, t, def));
      out = transition_table(c, combo, schemes);
    } else if (*lamb) {
      if (absolute) {
        out = absolute_1s_table(c, schemes);
      } else {
        const AtomSpec a = atom_by_label(c, atom_label);
        out = transition_table(c, difference(a, QuantumState(2, 0, 1), QuantumState(2, 1, 1)), schemes);
      }
    } else if (*tab1) {
      out = table1(c);
    } else if (*report) {
      auto rows = report_cases(c);
      if (g.scheme != "all") std::erase_if(rows, [&](const ReportRow& r) { return r.scheme != "-" && r.scheme != g.scheme; });
      out = report_table(rows);
      int failed = 0;
      for (const auto& r : rows) failed += r.pass() ? 0 : 1;
      if (failed) {
        std::cerr << failed << " of " << rows.size() << " rows exceed their tolerance\n";
        status = 1;
      }
    } else if (*appendix) {
      out = appendix_table(c);
    } else if (*oracle) {
      const auto sweeps = run_oracle_sweeps(c.alpha);
      out = oracle_table(sweeps);
      for (const auto& sw : sweeps) status |= sw.passed ? 0 : 1;
    } else if (*twobody) {
      out = twobody_table(c, zmin, zmax, zstep, n_twobody);
    }
    std::cout << render(out, format);
    return status;
  } catch (const std::exception& e) {
    std::cerr << "lambshift: " << e.what() << "\n";
    return 2;
  }
}
