#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eigenbound/errors.hpp"

namespace eigenbound {

namespace detail {
class CubicSpline;
}

/// Rotationally symmetric model manifolds: metrics dr^2 + f(r)^2 dtheta^2 on
/// a ball of radius R, plus the one-dimensional interval. The warp f
/// determines everything: the radial Laplacian coefficient (n-1) f'/f, the
/// Ricci curvature, and the mean curvature of the boundary sphere r = R.

enum class ModelKind { spherical_cap, euclidean_ball, warped_ball, interval };

std::string_view to_string(ModelKind kind);

enum class WarpForm { sin_form, sinh_form, identity, polynomial, sampled };

/// Closed-form or sampled warp specification. All forms satisfy f(0) = 0,
/// f'(0) = 1:
///   sin_form    f(r) = sin(a r)/a          (round sphere of curvature a^2)
///   sinh_form   f(r) = sinh(a r)/a         (hyperbolic, curvature -a^2)
///   identity    f(r) = r                   (flat)
///   polynomial  f(r) = r + sum_k c_k r^(k+2), c_k = coefficients[k]
///   sampled     cubic-spline interpolation of (r_samples, f_samples)
struct WarpSpec {
    WarpForm form = WarpForm::identity;
    double scale = 1.0;
    std::vector<double> coefficients;
    std::vector<double> r_samples;
    std::vector<double> f_samples;
};

struct ModelManifold {
    ModelKind kind = ModelKind::euclidean_ball;
    int n = 2;            // dimension; 1 for the interval
    double k = 0.0;       // curvature constant of a cap; 0 otherwise
    double radius = 1.0;  // R; L/2 for the interval
    WarpSpec warp_spec;
    std::shared_ptr<const detail::CubicSpline> sampled_warp;  // sampled form only

    /// Geodesic ball of radius R in the round n-sphere of curvature K.
    /// Requires n >= 2, K > 0, 0 < R < pi/sqrt(K) (the warp must stay
    /// positive up to the boundary).
    static ModelManifold spherical_cap(int n, double k, double r);

    /// Flat ball of radius R in dimension n >= 2.
    static ModelManifold euclidean_ball(int n, double r);

    /// Ball with a custom warp; requires n >= 2, R > 0, f(0) = 0, f'(0) = 1
    /// and positivity of f on (0, R].
    static ModelManifold warped_ball(int n, WarpSpec warp, double r);

    /// The interval [0, L], treated as the one-dimensional ball of radius
    /// L/2 (the radial coefficient vanishes and both endpoint symmetries are
    /// captured by u'(0) = 0, u(L/2) = 0).
    static ModelManifold interval(double l);

    void validate() const;

    /// d~ = 2 sup_x dist(x, boundary); exactly 2R for radial balls and L for
    /// the interval.
    double in_diameter() const { return 2.0 * radius; }

    double warp(double r) const;
    double warp_derivative(double r) const;
    double warp_second_derivative(double r) const;

    /// Short printable description, e.g. "cap(n=2, K=1, R=0.75)".
    std::string label() const;
};

/// (n-1) f'(r)/f(r), the first-order coefficient of the radial equation.
/// Requires 0 < r <= R; r = 0 is the coordinate pole.
double warp_log_derivative(const ModelManifold& model, double r);

/// Infimum over r in (0, R] and directions of Ricci/(n-1). Exactly K for a
/// spherical cap, 0 for a flat ball, -a^2 for the sinh warp; general warps
/// are evaluated on a fine grid (second derivatives by closed form when the
/// warp has one, else central differences with step R/4096).
/// The interval has no curvature: returns 0.
double ricci_lower(const ModelManifold& model);

/// Mean curvature m = (n-1) f'(R)/f(R) of the boundary sphere with respect
/// to the outward normal; 0 for the interval endpoints.
double boundary_mean_curvature(const ModelManifold& model);

}  // namespace eigenbound
