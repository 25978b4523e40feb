#include "lamb/report.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "lamb/corrections.hpp"
#include "lamb/dirac_levels.hpp"
#include "lamb/self_energy.hpp"
#include "lamb/transitions.hpp"

namespace lamb {

double ReportRow::gap() const {
  const double d = std::abs(ours_hz - reference_hz);
  return gate == Gate::Absolute ? d : d / std::abs(reference_hz);
}

bool ReportRow::pass() const { return gate == Gate::Info || gap() <= tolerance; }

std::optional<double> ReportRow::discrepancy_percent() const {
  if (!experiment_hz) return std::nullopt;
  return 100.0 * (ours_hz - *experiment_hz) / *experiment_hz;
}

namespace {

using S = ZetaScheme;

struct Builder {
  const PhysicalConstants& c;
  std::vector<ReportRow> rows;

  void add(std::string case_id, std::string quantity, std::string scheme, int criterion, double tolerance,
           double ours, double reference, std::optional<double> experiment = std::nullopt) {
    ReportRow r;
    r.case_id = std::move(case_id);
    r.quantity = std::move(quantity);
    r.scheme = std::move(scheme);
    r.criterion = criterion;
    r.gate = criterion == 0 ? Gate::Info : Gate::Relative;
    r.tolerance = criterion == 0 ? std::numeric_limits<double>::quiet_NaN() : tolerance;
    r.ours_hz = ours;
    r.reference_hz = reference;
    r.experiment_hz = experiment;
    rows.push_back(std::move(r));
  }

  Channels eval(const TransitionCombo& combo, S scheme) const { return evaluate_transition(c, combo, scheme).channels; }
};

}  // namespace

std::vector<ReportRow> report_cases(const PhysicalConstants& c) {
  Builder b{c, {}};
  const AtomSpec H = hydrogen(c);
  const AtomSpec D = deuterium(c);
  const AtomSpec He = helium_ion(c);
  const QuantumState s1(1, 0, 1), s2(2, 0, 1), p2(2, 1, 1), s4(4, 0, 1), d4(4, 2, 5);
  const auto exp = [](const char* id) { return lookup_experiment(id).value_hz; };
  const std::string none = "-";
  const auto lbl = [](S s) { return std::string(scheme_label(s)); };

  const auto h21 = difference(H, s2, s1);
  const auto iso = isotope_difference(D, H, s2, s1);
  const auto classic_h = difference(H, s2, p2);
  const auto classic_he = difference(He, s2, p2);
  const auto hyper4s = hyper_lamb_combo(H, s4);
  const auto hyper4d = hyper_lamb_combo(H, d4);
  const auto d4s4 = difference(H, d4, s4);

  // Scheme-independent channels are taken from the S evaluation.
  const auto ch21 = b.eval(h21, S::SelfEnergy);
  const auto chiso = b.eval(iso, S::SelfEnergy);
  const auto chh = b.eval(classic_h, S::SelfEnergy);
  const auto chhe = b.eval(classic_he, S::SelfEnergy);
  const auto ch4s = b.eval(hyper4s, S::SelfEnergy);
  const auto ch4d = b.eval(hyper4d, S::SelfEnergy);
  const auto chd4s4 = b.eval(d4s4, S::SelfEnergy);

  // Section II: reduced Dirac equation for 2S-1S and its isotope shift.
  b.add("II", "RDE H(2S - 1S)", none, 2, 1e-9, ch21.rde_hz, 2.466067984e15, exp("H_1S2S"));
  b.add("II", "RDE D-H(2S - 1S)", none, 2, 1e-9, chiso.rde_hz, 6.7101527879e11, exp("HD_isotope_2S1S"));
  b.add("II", "recoil-1 D-H(2S - 1S)", none, 3, 1e-3, chiso.recoil1_hz, -11.176e6);

  // (a) hydrogen classic Lamb shift
  b.add("a", "recoil-2 H(2S - 2P1/2)", none, 3, 1e-3, chh.recoil2_hz, -2.16156e3);
  b.add("a", "NS H(2S - 2P1/2)", none, 6, 1e-5, chh.ns_hz, 0.14525347e6);
  const std::pair<S, double> rad_h[] = {
      {S::SelfEnergy, 1000.6567e6}, {S::Virial, 1451.7912e6}, {S::ArithmeticMean, 1089.6513e6}, {S::GeometricMean, 1226.0871e6}};
  for (auto [s, ref] : rad_h) b.add("a", "rad H(2S - 2P1/2)", lbl(s), 4, 2e-4, b.eval(classic_h, s).rad_hz, ref);
  b.add("a", "Lamb H(2S1/2 - 2P1/2)", lbl(S::ArithmeticMean), 5, 1e-4, classic_lamb(c, H, S::ArithmeticMean).channels.total_hz,
        1089.794e6, exp("H_classic_lamb"));

  // (b) He+ classic Lamb shift
  const std::pair<S, double> rad_he[] = {{S::SelfEnergy, 1.252680693e10},
                                         {S::Virial, 2.023083608e10},
                                         {S::ArithmeticMean, 1.369980830e10},
                                         {S::GeometricMean, 1.636521214e10}};
  for (auto [s, ref] : rad_he) b.add("b", "rad He+(2S - 2P1/2)", lbl(s), 4, 2e-4, b.eval(classic_he, s).rad_hz, ref);
  b.add("b", "recoil-2 He+(2S - 2P1/2)", none, 0, 0.0, chhe.recoil2_hz, -2.165e3);
  b.add("b", "NS He+(2S - 2P1/2)", none, 6, 1e-5, chhe.ns_hz, 4.514e6);
  b.add("b", "Lamb He+(2S1/2 - 2P1/2)", lbl(S::ArithmeticMean), 5, 2e-4,
        classic_lamb(c, He, S::ArithmeticMean).channels.total_hz, 13704.220e6, exp("He_classic_lamb"));

  // (c) hyper Lamb shift with 4S
  b.add("c", "RDE H[4S - 5/4 2S + 1/4 1S]", none, 0, 0.0, ch4s.rde_hz, 3923.95e6);
  b.add("c", "recoil-1 H[4S - 5/4 2S + 1/4 1S]", none, 3, 1e-3, ch4s.recoil1_hz, -4.186e6);
  const std::pair<S, double> rad_4s[] = {
      {S::SelfEnergy, 451.229097e6}, {S::ArithmeticMean, 529.288296e6}, {S::GeometricMean, 675.907131e6}, {S::Virial, 903.266275e6}};
  for (auto [s, ref] : rad_4s) b.add("c", "rad H[4S - 5/4 2S + 1/4 1S]", lbl(s), 4, 2e-4, b.eval(hyper4s, s).rad_hz, ref);
  b.add("c", "NS H[4S - 5/4 2S + 1/4 1S]", none, 6, 1e-5, ch4s.ns_hz, 0.1270967854e6);
  const std::pair<S, double> tot_4s[] = {
      {S::SelfEnergy, 4371.120197e6}, {S::ArithmeticMean, 4449.179396e6}, {S::GeometricMean, 4595.798231e6}, {S::Virial, 4823.1574e6}};
  for (auto [s, ref] : tot_4s)
    b.add("c", "total H[4S - 5/4 2S + 1/4 1S]", lbl(s), s == S::Virial ? 5 : 0, 1e-4, b.eval(hyper4s, s).total_hz, ref,
          exp("H_hyper_lamb_4S"));

  // (d) hyper Lamb shift with 4D5/2
  b.add("d", "RDE H[4D5/2 - 5/4 2S + 1/4 1S]", none, 0, 0.0, ch4d.rde_hz, 5747.92e6);
  b.add("d", "recoil-1 H[4D5/2 - 5/4 2S + 1/4 1S]", none, 0, 0.0, ch4d.recoil1_hz, -4.18611e6);
  b.add("d", "recoil-2 H(4D5/2)", none, 3, 1e-3, ch4d.recoil2_hz, -6.9283e3);
  const std::pair<S, double> rad_4d[] = {
      {S::SelfEnergy, 302.088631e6}, {S::Virial, 700.843464e6}, {S::ArithmeticMean, 369.124660e6}, {S::GeometricMean, 500.131264e6}};
  for (auto [s, ref] : rad_4d) b.add("d", "rad H[4D5/2 - 5/4 2S + 1/4 1S]", lbl(s), 4, 2e-4, b.eval(hyper4d, s).rad_hz, ref);
  b.add("d", "NS H[4D5/2 - 5/4 2S + 1/4 1S]", none, 0, 0.0, ch4d.ns_hz, 0.10894e6);
  const std::pair<S, double> tot_4d[] = {
      {S::SelfEnergy, 6045.925e6}, {S::Virial, 6444.679e6}, {S::ArithmeticMean, 6112.961e6}, {S::GeometricMean, 6243.967e6}};
  for (auto [s, ref] : tot_4d)
    b.add("d", "total H[4D5/2 - 5/4 2S + 1/4 1S]", lbl(s), 5, 2e-4, b.eval(hyper4d, s).total_hz, ref,
          exp("H_hyper_lamb_4D52"));

  // (e) 4D5/2 - 4S
  b.add("e", "RDE H(4D5/2 - 4S)", none, 0, 0.0, chd4s4.rde_hz, 1.823886903e9);
  b.add("e", "recoil-1 H(4D5/2 - 4S)", none, 0, 0.0, chd4s4.recoil1_hz, 1.1008);
  b.add("e", "recoil-2 H(4D5/2 - 4S)", none, 0, 0.0, chd4s4.recoil2_hz, -6.9283e3);
  b.add("e", "NS H(4D5/2 - 4S)", none, 0, 0.0, chd4s4.ns_hz, -0.0181605862e6);
  const std::pair<S, double> rad_d4s4[] = {{S::SelfEnergy, -149.1404661e6},
                                           {S::Virial, -202.4228107e6},
                                           {S::ArithmeticMean, -160.1636366e6},
                                           {S::GeometricMean, -175.7758676e6}};
  for (auto [s, ref] : rad_d4s4) b.add("e", "rad H(4D5/2 - 4S)", lbl(s), 4, 2e-4, b.eval(d4s4, s).rad_hz, ref);
  const std::pair<S, double> tot_d4s4[] = {{S::SelfEnergy, 1674.721349e6},
                                           {S::ArithmeticMean, 1663.716339e6},
                                           {S::GeometricMean, 1648.104108e6},
                                           {S::Virial, 1621.439105e6}};
  for (auto [s, ref] : tot_d4s4)
    b.add("e", "total H(4D5/2 - 4S)", lbl(s), 5, 2e-4, b.eval(d4s4, s).total_hz, ref, exp("H_4D52_4S"));

  // (f) hydrogen 2S - 1S
  b.add("f", "recoil-1 H(2S - 1S)", none, 0, 0.0, ch21.recoil1_hz, 22.32598676e6);
  const std::pair<S, double> rad_21[] = {{S::SelfEnergy, -5142.081146e6},
                                         {S::ArithmeticMean, -5765.958928e6},
                                         {S::GeometricMean, -6835.535314e6},
                                         {S::Virial, -8541.095068e6}};
  for (auto [s, ref] : rad_21) b.add("f", "rad H(2S - 1S)", lbl(s), 4, 2e-4, b.eval(h21, s).rad_hz, ref);
  b.add("f", "NS H(2S - 1S)", none, 6, 1e-5, ch21.ns_hz, -1.016774283e6);
  const std::pair<S, double> tot_21[] = {{S::SelfEnergy, 2.466062836e15},
                                         {S::ArithmeticMean, 2.466062239e15},
                                         {S::GeometricMean, 2.466061169e15},
                                         {S::Virial, 2.466059464e15}};
  for (auto [s, ref] : tot_21) b.add("f", "total H(2S - 1S)", lbl(s), 5, 1e-7, b.eval(h21, s).total_hz, ref, exp("H_1S2S"));

  // (g) D-H isotope shift of 2S - 1S
  const std::pair<S, double> rad_iso[] = {{S::SelfEnergy, -1.399158e6},
                                          {S::Virial, -2.324028e6},
                                          {S::ArithmeticMean, -1.568915e6},
                                          {S::GeometricMean, -1.859945e6}};
  for (auto [s, ref] : rad_iso) b.add("g", "rad D-H(2S - 1S)", lbl(s), 4, 2e-4, b.eval(iso, s).rad_hz, ref);
  b.add("g", "NS D-H(2S - 1S)", none, 6, 1e-5, chiso.ns_hz, -5.11384949e6);
  b.add("g", "total D-H(2S - 1S)", lbl(S::Virial), 5, 1e-7, b.eval(iso, S::Virial).total_hz, 6.709966701e11,
        exp("HD_isotope_2S1S"));

  // (h) absolute 1S Lamb shift, evaluated with the V scheme
  const auto abs1s = absolute_lamb_1s(c, S::Virial);
  b.add("h", "L H(2S)", lbl(S::Virial), 5, 5e-4, abs1s.lamb_2s_hz, 1040.901e6);
  b.add("h", "L H(1S) from 4D5/2 combination", lbl(S::Virial), 5, 5e-4, abs1s.empirical_hz, 8188.478e6, exp("H_lamb_1S"));
  b.add("h", "NS H(1S)", none, 0, 0.0, abs1s.ns_1s_hz, 0.14525347e6);

  return b.rows;
}

Table report_table(const std::vector<ReportRow>& rows) {
  Table t;
  t.columns = {"case", "quantity", "scheme", "criterion", "ours_hz", "reference_hz", "gap", "tolerance", "status",
               "experiment_hz", "discrepancy_percent"};
  for (const auto& r : rows) {
    const bool info = r.gate == Gate::Info;
    t.add_row({Cell::str(r.case_id), Cell::str(r.quantity), Cell::str(r.scheme),
               info ? Cell::none() : Cell::num(r.criterion), Cell::num(r.ours_hz), Cell::num(r.reference_hz),
               Cell::num(r.gap(), 3), info ? Cell::none() : Cell::num(r.tolerance, 3),
               Cell::str(info ? "info" : (r.pass() ? "pass" : "FAIL")),
               r.experiment_hz ? Cell::num(*r.experiment_hz) : Cell::none(),
               r.discrepancy_percent() ? Cell::num(*r.discrepancy_percent(), 4) : Cell::none()});
  }
  return t;
}

bool all_pass(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

}  // namespace lamb
