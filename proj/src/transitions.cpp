#include "lamb/transitions.hpp"

#include <charconv>
#include <stdexcept>

#include "lamb/corrections.hpp"
#include "lamb/radiative.hpp"
#include "lamb/summation.hpp"

namespace lamb {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last || first == last)
    throw std::invalid_argument("cannot parse coefficient '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) throw std::invalid_argument("coefficient denominator must be positive in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

TransitionCombo& TransitionCombo::add(Rational coefficient, const AtomSpec& atom, const QuantumState& state) {
  terms.push_back({coefficient, atom, state});
  return *this;
}

std::string TransitionCombo::label() const {
  std::string out;
  for (const auto& t : terms) {
    // boost::rational's mixed rational/int comparisons recurse under C++20
    // rewritten operators, so only the numerator is inspected.
    const bool negative = t.coefficient.numerator() < 0;
    const Rational mag = negative ? -t.coefficient : t.coefficient;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag.denominator() != 1 || mag.numerator() != 1) out += format_rational(mag) + " ";
    out += t.atom.label + "(" + t.state.label() + ")";
  }
  return out;
}

TransitionCombo difference(const AtomSpec& atom, const QuantumState& upper, const QuantumState& lower) {
  TransitionCombo c;
  c.add(1, atom, upper).add(-1, atom, lower);
  return c;
}

TransitionCombo isotope_difference(const AtomSpec& heavy, const AtomSpec& light, const QuantumState& upper,
                                   const QuantumState& lower) {
  TransitionCombo c;
  c.add(1, heavy, upper).add(-1, heavy, lower).add(-1, light, upper).add(1, light, lower);
  return c;
}

TransitionCombo hyper_lamb_combo(const AtomSpec& atom, const QuantumState& top) {
  TransitionCombo c;
  c.add(1, atom, top).add(Rational(-5, 4), atom, QuantumState(2, 0, 1)).add(Rational(1, 4), atom, QuantumState(1, 0, 1));
  return c;
}

ComboTerm parse_combo_term(const PhysicalConstants& c, std::string_view text, const AtomSpec& default_atom) {
  ComboTerm term;
  term.atom = default_atom;
  const auto at = text.find('@');
  if (at != std::string_view::npos) {
    term.coefficient = parse_rational(text.substr(at + 1));
    text = text.substr(0, at);
  }
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    term.atom = atom_by_label(c, text.substr(0, colon));
    text = text.substr(colon + 1);
  }
  term.state = QuantumState::parse(text);
  return term;
}

LevelBreakdown level_breakdown(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& state,
                               ZetaScheme scheme) {
  atom.validate(c.alpha);
  LevelBreakdown b;
  b.scheme = scheme;
  b.zeta_used = zeta(scheme, c.alpha, atom.Z, state.n());
  b.rde_hz = rde_level_hz(c, atom, state);
  b.recoil1_hz = recoil1_hz(c, atom, state);
  b.recoil2_hz = recoil2_hz(c, atom, state);
  b.rad_hz = rad_level_shift_hz(c, atom, state, b.zeta_used);
  b.ns_hz = nuclear_size_hz(c, atom, state);
  CompensatedSum total;
  for (double x : {b.rde_hz, b.recoil1_hz, b.recoil2_hz, b.rad_hz, b.ns_hz}) total += x;
  b.total_hz = total.value();
  return b;
}

TransitionResult evaluate_transition(const PhysicalConstants& c, const TransitionCombo& combo, ZetaScheme scheme) {
  if (combo.terms.empty()) throw std::invalid_argument("evaluate_transition: empty combination");
  TransitionResult r;
  CompensatedSum rde, rec1, rec2, rad, ns, total;
  for (const auto& t : combo.terms) {
    const auto b = level_breakdown(c, t.atom, t.state, scheme);
    const double w = boost::rational_cast<double>(t.coefficient);
    rde += w * b.rde_hz;
    rec1 += w * b.recoil1_hz;
    rec2 += w * b.recoil2_hz;
    rad += w * b.rad_hz;
    ns += w * b.ns_hz;
    for (double x : {b.rde_hz, b.recoil1_hz, b.recoil2_hz, b.rad_hz, b.ns_hz}) total += w * x;
    r.levels.push_back(b);
  }
  r.channels = {rde.value(), rec1.value(), rec2.value(), rad.value(), ns.value(), total.value()};
  return r;
}

TransitionResult classic_lamb(const PhysicalConstants& c, const AtomSpec& atom, ZetaScheme scheme) {
  // RDE and recoil-1 depend on (n, j) only and cancel between 2S1/2 and 2P1/2.
  return evaluate_transition(c, difference(atom, QuantumState(2, 0, 1), QuantumState(2, 1, 1)), scheme);
}

AbsoluteLamb1S absolute_lamb_1s(const PhysicalConstants& c, ZetaScheme scheme) {
  const AtomSpec h = hydrogen(c);
  const QuantumState s1(1, 0, 1), p2(2, 1, 1), d4(4, 2, 5);
  const double classic_exp = lookup_experiment("H_classic_lamb").value_hz;
  const double hyper_exp = lookup_experiment("H_hyper_lamb_4D52").value_hz;

  AbsoluteLamb1S out;
  out.scheme = scheme;
  const auto b2p = level_breakdown(c, h, p2, scheme);
  out.lamb_2s_hz = classic_exp + b2p.recoil2_hz + b2p.rad_hz;
  const auto b4d = level_breakdown(c, h, d4, scheme);
  out.lamb_4d52_hz = b4d.rad_hz;
  const auto combo = evaluate_transition(c, hyper_lamb_combo(h, d4), scheme).channels;
  CompensatedSum inner;
  for (double x : {hyper_exp, -combo.rde_hz, -combo.recoil1_hz, -b4d.recoil2_hz, 1.25 * out.lamb_2s_hz,
                   -out.lamb_4d52_hz})
    inner += x;
  out.empirical_hz = 4.0 * inner.value();
  const auto b1s = level_breakdown(c, h, s1, scheme);
  out.rad_1s_hz = b1s.rad_hz;
  out.ns_1s_hz = b1s.ns_hz;
  out.theoretical_hz = b1s.rad_hz + b1s.ns_hz;
  return out;
}

}  // namespace lamb
