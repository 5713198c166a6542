#pragma once

#include <functional>
#include <span>
#include <vector>

namespace reserve_lab::numeric {

using ScalarFn = std::function<double(double)>;

// Adaptive Simpson on [a, b] to absolute tolerance `tol`. The interval is first
// split at every point of `breaks` that falls strictly inside it, and the
// tolerance is shared across pieces in proportion to their length.
double adaptive_simpson(const ScalarFn& f, double a, double b, double tol,
                        std::span<const double> breaks = {}, int max_depth = 48);

// Golden-section search for a maximizer of a unimodal f on [a, b].
struct Extremum {
  double x;
  double value;
};
Extremum golden_section_max(const ScalarFn& f, double a, double b, double xtol = 1e-10);

// Bisection for a sign change of f on [a, b] (f(a) and f(b) must differ in sign,
// treating zero as nonnegative). Returns the endpoint of the final bracket on
// the side where f >= 0.
double bisect_boundary(const ScalarFn& f, double a, double b, double xtol = 1e-12);

// Sorted, de-duplicated copy of `points` restricted to [lo, hi].
std::vector<double> clean_breaks(std::vector<double> points, double lo, double hi);

}  // namespace reserve_lab::numeric
