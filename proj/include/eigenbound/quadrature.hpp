#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "eigenbound/errors.hpp"

namespace eigenbound {

/// Adaptive Simpson quadrature with an absolute tolerance.
///
/// The tolerance is distributed over subintervals in the usual way (each half
/// gets tol/2) and refinement stops once the Richardson error estimate
/// |S_left + S_right - S_whole| / 15 drops below the local budget. A
/// tolerance below what binary64 evaluation noise permits is not an error:
/// refinement then runs to the depth cap and the best available estimate is
/// returned.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 24);

/// Same, but the interval is first split at the given interior breakpoints so
/// that every panel is smooth under a single evaluation branch of f.
/// Breakpoints outside (a, b) are ignored.
double integrate_piecewise(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           double abs_tol = 1e-10, int max_depth = 24);

}  // namespace eigenbound
