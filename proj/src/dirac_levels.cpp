#include "lamb/dirac_levels.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lamb {

namespace {

constexpr std::string_view kOrbitalLetters = "SPDFGHIK";

void check_domain(const QuantumState& s, double z_alpha) {
  const double k = s.j_plus_half();
  if (!(z_alpha >= 0.0) || !(k * k > z_alpha * z_alpha))
    throw std::domain_error("dirac_f: (j+1/2)^2 must exceed (Z alpha)^2");
  if (s.n() < s.j_plus_half()) throw std::domain_error("dirac_f: n must be >= j + 1/2");
}

}  // namespace

QuantumState::QuantumState(int n, int l, int two_j) : n_(n), l_(l), two_j_(two_j) {
  if (n < 1) throw std::invalid_argument("QuantumState: n must be >= 1");
  if (l < 0 || l > n - 1) throw std::invalid_argument("QuantumState: l must lie in [0, n-1]");
  if (two_j <= 0 || std::abs(two_j - 2 * l) != 1)
    throw std::invalid_argument("QuantumState: j must equal l +- 1/2");
}

QuantumState QuantumState::parse(std::string_view label) {
  const auto bad = [&] { return std::invalid_argument("cannot parse state '" + std::string(label) + "'"); };
  int n = 0;
  const char* first = label.data();
  const char* last = first + label.size();
  auto [p, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || p == last) throw bad();
  const auto letter = static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
  const auto l = kOrbitalLetters.find(letter);
  if (l == std::string_view::npos) throw bad();
  ++p;
  int two_j = 0;
  if (p == last) {
    // "nS" is unambiguous; other bare letters are not.
    if (l != 0) throw bad();
    two_j = 1;
  } else {
    auto [q, ec2] = std::from_chars(p, last, two_j);
    if (ec2 != std::errc{} || q == last || *q != '/' || std::string_view(q, last) != "/2") throw bad();
  }
  return QuantumState(n, static_cast<int>(l), two_j);
}

std::string QuantumState::label() const {
  return std::to_string(n_) + kOrbitalLetters[static_cast<std::size_t>(l_)] + std::to_string(two_j_) + "/2";
}

void AtomSpec::validate(double alpha) const {
  if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("AtomSpec " + label + ": b must lie in (0, 1)");
  if (Z < 1 || !(Z * alpha < 1.0)) throw std::invalid_argument("AtomSpec " + label + ": need 1 <= Z, Z alpha < 1");
  if (!(r_N_fm >= 0.0)) throw std::invalid_argument("AtomSpec " + label + ": radius must be >= 0");
}

AtomSpec hydrogen(const PhysicalConstants& c) { return {"H", 1, c.b_H, c.r_p_fm}; }
AtomSpec deuterium(const PhysicalConstants& c) { return {"D", 1, c.b_D, c.r_d_fm}; }
AtomSpec helium_ion(const PhysicalConstants& c) { return {"He+", 2, c.b_He, c.r_alpha_fm}; }

AtomSpec atom_by_label(const PhysicalConstants& c, std::string_view label) {
  if (label == "H") return hydrogen(c);
  if (label == "D") return deuterium(c);
  if (label == "He+" || label == "He") return helium_ion(c);
  throw std::invalid_argument("unknown atom '" + std::string(label) + "' (expected H, D or He+)");
}

double dirac_f_minus_one(const QuantumState& s, double z_alpha) {
  check_domain(s, z_alpha);
  const double k = s.j_plus_half();
  const double za2 = z_alpha * z_alpha;
  // beta = k - sqrt(k^2 - za^2), rationalised
  const double beta = za2 / (k + std::sqrt(k * k - za2));
  const double nr = s.n() - beta;
  const double x = za2 / (nr * nr);
  return std::expm1(-0.5 * std::log1p(x));
}

double dirac_f(const QuantumState& s, double z_alpha) { return 1.0 + dirac_f_minus_one(s, z_alpha); }

double dirac_f_series_minus_one(const QuantumState& s, double z_alpha) {
  check_domain(s, z_alpha);
  const double n = s.n();
  const double k = s.j_plus_half();
  const double za2 = z_alpha * z_alpha;
  const double za4 = za2 * za2;
  const double za6 = za4 * za2;
  const double n2 = n * n;
  const double n3 = n2 * n;
  const double t2 = -za2 / (2.0 * n2);
  const double t4 = -za4 / (2.0 * n3) * (1.0 / k - 3.0 / (4.0 * n));
  const double t6 = -za6 / (8.0 * n3) *
                    (1.0 / (k * k * k) + 3.0 / (n * k * k) + 5.0 / (2.0 * n3) - 6.0 / (n2 * k));
  return t2 + t4 + t6;
}

double dirac_f_series_next_term(const QuantumState& s, double z_alpha) {
  check_domain(s, z_alpha);
  const double n = s.n();
  const double k = s.j_plus_half();
  const double za2 = z_alpha * z_alpha;
  const double c4 = (35.0 * k * k * k * k * k - 120.0 * k * k * k * k * n + 120.0 * k * k * k * n * n -
                     8.0 * k * k * n * n * n - 24.0 * k * n * n * n * n - 8.0 * n * n * n * n * n) /
                    (128.0 * std::pow(k, 5) * std::pow(n, 8));
  return std::abs(c4) * za2 * za2 * za2 * za2;
}

double dirac_f_series(const QuantumState& s, double z_alpha) {
  return 1.0 + dirac_f_series_minus_one(s, z_alpha);
}

double reduced_mass_hz(const PhysicalConstants& c, const AtomSpec& atom) { return c.m_e_hz / (1.0 + atom.b); }

double rde_level_hz(const PhysicalConstants& c, const AtomSpec& atom, const QuantumState& s) {
  return reduced_mass_hz(c, atom) * dirac_f_minus_one(s, atom.Z * c.alpha);
}

}  // namespace lamb
