#include "reserve_lab/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace reserve_lab::numeric {
namespace {

double simpson_step(const ScalarFn& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol || m - a <= 1e-15 * std::max(1.0, std::abs(m))) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double simpson_piece(const ScalarFn& f, double a, double b, double tol, int max_depth) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace

std::vector<double> clean_breaks(std::vector<double> points, double lo, double hi) {
  std::erase_if(points, [&](double x) { return !(x > lo && x < hi) || !std::isfinite(x); });
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double adaptive_simpson(const ScalarFn& f, double a, double b, double tol, std::span<const double> breaks,
                        int max_depth) {
  if (b <= a) return 0.0;
  std::vector<double> knots = clean_breaks({breaks.begin(), breaks.end()}, a, b);
  knots.insert(knots.begin(), a);
  knots.push_back(b);
  const double span_len = b - a;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = knots[i];
    const double hi = knots[i + 1];
    if (hi <= lo) continue;
    // Four equal sub-pieces per knot interval keep the initial estimate from
    // accidentally agreeing with itself on oscillating integrands.
    constexpr int kPieces = 4;
    const double piece_tol = tol * (hi - lo) / span_len / kPieces;
    for (int k = 0; k < kPieces; ++k) {
      const double x0 = lo + (hi - lo) * k / kPieces;
      const double x1 = k + 1 == kPieces ? hi : lo + (hi - lo) * (k + 1) / kPieces;
      total += simpson_piece(f, x0, x1, piece_tol, max_depth);
    }
  }
  return total;
}

Extremum golden_section_max(const ScalarFn& f, double a, double b, double xtol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  // The ends of the final bracket can beat the interior probes at kinks.
  Extremum best{c, fc};
  for (double x : {a, b, d, 0.5 * (a + b)}) {
    const double fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

double bisect_boundary(const ScalarFn& f, double a, double b, double xtol) {
  bool a_in = f(a) >= 0.0;
  while (b - a > xtol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    if ((f(m) >= 0.0) == a_in) {
      a = m;
    } else {
      b = m;
    }
  }
  return a_in ? a : b;
}

}  // namespace reserve_lab::numeric
