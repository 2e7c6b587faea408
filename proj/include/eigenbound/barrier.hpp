#pragma once

#include <string>
#include <vector>

#include "eigenbound/errors.hpp"

namespace eigenbound {

// The barrier function
//
//   xi(t) = (cos^2 t + 2 t sin t cos t + t^2 - pi^2/4) / cos^2 t
//
// on [-pi/2, pi/2], an even function with xi(0) = 1 - pi^2/4 and
// xi(+-pi/2) = 0. It solves
//
//   (1/2) xi'' cos^2 t - xi' cos t sin t - xi = 2 cos^2 t,
//
// and the test function z(t) = 1 + delta * xi(t) turns the barrier inequality
// of the eigenvalue comparison argument into an equality. The closed form is
// a 0/0 at |t| = pi/2; near the endpoints evaluation switches to a Taylor
// expansion in u = pi/2 - |t| whose coefficients are exact.

/// xi with derivatives up to fifth order at one point. Orders 4 and 5 feed
/// the higher residual checks only.
struct XiJet {
    double t = 0.0;
    double v0 = 0.0, v1 = 0.0, v2 = 0.0, v3 = 0.0, v4 = 0.0, v5 = 0.0;
};

/// The public evaluation record: value and first three derivatives.
struct XiEvaluation {
    double t = 0.0;
    double value = 0.0;
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

/// xi(t). Throws invalid_input for |t| > pi/2.
double xi(double t);

/// xi with d1 = xi', d2 = xi'', d3 = xi'''. The first derivative comes from
/// its own closed form (or series); the second and third are obtained by
/// solving the defining ODEs for the highest derivative, which avoids the
/// cancellation a symbolic quotient derivative would reintroduce.
XiEvaluation xi_derivatives(double t);

/// Full jet through the fifth derivative.
XiJet xi_jet(double t);

struct ZEvaluation {
    double z = 0.0;
    double z1 = 0.0;
    double z2 = 0.0;
};

/// z = 1 + delta * xi and scaled derivatives. Requires |t| <= pi/2 and
/// 0 <= delta <= 1 (values beyond the proof range are allowed so negative
/// controls can be exercised).
ZEvaluation z_eval(double t, double delta);

/// Residual of the second-order ODE above; analytically zero.
double xi_ode_residual(double t);

/// Residual of the first-order identity xi' cos t - 2 xi sin t = 4 t cos t;
/// analytically zero.
double xi_identity_residual(double t);

/// Residual of (1/2) z'' cos^2 t - z' cos t sin t - z = -1 + 2 delta cos^2 t
/// along z = 1 + delta * xi; analytically zero for every delta.
double z_ode_residual(double t, double delta);

/// The barrier inequality evaluated on an arbitrary profile value triple:
///   (1/2) z2 cos^2 t0 - z1 cos t0 sin t0 - z + 1 - 2 delta cos^2 t0.
/// Nonnegative at a contact point by the comparison theorem; identically
/// zero along z = 1 + delta * xi; strictly negative for a constant positive
/// offset. Throws invalid_input unless z > 0 (contact-point positivity).
double barrier_inequality_rhs(double t0, double z, double z1, double z2,
                              double delta);

/// Integral of xi over [a, b] in [-pi/2, pi/2] by adaptive Simpson with the
/// panels split at the evaluation-branch boundaries. Absolute tolerance.
double xi_integral(double a, double b, double abs_tol = 1e-10);

/// One raw residual together with its normalization scale
/// (1 + magnitude of the largest term in the identity).
struct ScaledResidual {
    double raw = 0.0;
    double scale = 1.0;
    double relative() const { return raw / scale; }
};

/// Residuals of the five differential identities satisfied by xi and its
/// derivative q = xi': the second-order ODE, the first-order identity, and
/// the three q-equations (orders involve up to the fifth derivative).
struct XiResiduals {
    ScaledResidual ode2;         // (1/2) xi'' c^2 - xi' c s - xi = 2 c^2
    ScaledResidual first_order;  // xi' c - 2 xi s = 4 t c
    ScaledResidual q_ode;        // (1/2) q'' c - 2 q' s - 2 q c = -4 s
    ScaledResidual q1_ode;       // c^2/(2(1+c^2)) q''' - 2 c s/(1+c^2) q'' - 2 q' = -4/(1+c^2)
    ScaledResidual q2_ode;       // same pattern one order higher
};

XiResiduals xi_residual_set(double t);

/// Outcome of one analytic property check on a symmetric grid.
struct XiPropertyOutcome {
    std::string id;
    std::string equation_tag;
    double worst = 0.0;      // max |relative residual|, or worst margin
    double threshold = 0.0;  // pass iff worst <= threshold
    bool passed = false;
};

struct XiReport {
    int grid_size = 0;
    double tol = 0.0;
    std::vector<XiPropertyOutcome> properties;
    bool all_passed() const;
};

/// Checks every analytic property of xi on a symmetric grid of the given
/// size over [-pi/2, pi/2]:
///   - the five differential identities, residuals relative to the largest
///     term, threshold `tol`;
///   - the integral over [0, pi/2] equals -pi/2 (threshold `tol`);
///   - endpoint and minimum values to `tol`/10;
///   - sign, monotonicity, convexity and ratio-range statements with a fixed
///     structural slack.
/// Requires grid_size >= 101. Failures are recorded, never thrown.
XiReport lemma5_property_suite(int grid_size, double tol = 1e-9);

}  // namespace eigenbound
