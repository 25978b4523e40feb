#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lamb {

template <class F>
RootResult solve_monotone(F&& g, double target, double lo, double hi, double rel_width) {
  double flo = g(lo) - target;
  double fhi = g(hi) - target;
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo < 0.0) == (fhi < 0.0)) throw std::runtime_error("solve_monotone: bracket does not straddle the target");

  RootResult out;
  constexpr int kMaxIterations = 400;
  double x = 0.5 * (lo + hi);
  for (out.iterations = 1; out.iterations <= kMaxIterations; ++out.iterations) {
    // Secant step, accepted only if it lands well inside the bracket.
    const double secant = hi - fhi * (hi - lo) / (fhi - flo);
    const double width = hi - lo;
    const bool inside = secant > lo + 0.01 * width && secant < hi - 0.01 * width;
    x = inside ? secant : 0.5 * (lo + hi);
    const double fx = g(x) - target;
    if (fx == 0.0) break;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    // When the secant keeps hitting the same side, the next bisection keeps
    // the bracket shrinking geometrically.
    if (!inside || (hi - lo) > 0.5 * width) {
      const double mid = 0.5 * (lo + hi);
      const double fm = g(mid) - target;
      if (fm == 0.0) {
        x = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
        fhi = fm;
      }
    }
    if (hi - lo <= rel_width * std::abs(0.5 * (lo + hi))) {
      x = std::abs(flo) < std::abs(fhi) ? lo : hi;
      break;
    }
  }
  out.root = x;
  return out;
}

}  // namespace lamb
