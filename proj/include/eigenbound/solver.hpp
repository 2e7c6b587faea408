#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "eigenbound/errors.hpp"
#include "eigenbound/model.hpp"

namespace eigenbound {

enum class SolveMethod { shooting, finite_difference };

std::string_view to_string(SolveMethod method);

struct SolverConfig {
    int grid_points = 4096;        // integration steps / finest cell count
    double tolerance = 1e-10;      // relative eigenvalue tolerance
    SolveMethod method = SolveMethod::shooting;
    /// Shooting starts at r = pole_offset instead of the singular pole;
    /// unset means 1e-8 * R.
    std::optional<double> pole_offset;

    /// Throws invalid_input on grid_points < 64, tolerance below
    /// 100 * machine epsilon, or a nonpositive pole offset.
    void validate() const;

    double effective_pole_offset(double radius) const;
};

/// First Dirichlet eigenpair of the radial problem
///   u'' + (n-1)(f'/f) u' + lambda u = 0,  u'(0) = 0,  u(R) = 0.
/// The profile is sampled on an increasing r_grid in [0, R]; after
/// normalize(), v decreases from v(0) = 1 to v(R) = 0 and v_prime holds the
/// radial derivative on the same grid.
struct RadialEigenSolution {
    double lambda = 0.0;
    std::vector<double> r_grid;
    std::vector<double> v;
    std::vector<double> v_prime;
    double d_tilde = 0.0;  // 2R
    SolveMethod method = SolveMethod::shooting;
};

/// Shooting: RK4 integration from the regular series start
///   u(e) = 1 - lambda e^2/(2n),  u'(e) = -lambda e/n,
/// bisecting lambda on the sign of u(R). The bracket starts from the
/// Rayleigh quotient of the trial profile cos(pi r/(2R)) and doubles until
/// the endpoint value changes sign. Returns the normalized solution.
RadialEigenSolution solve_shooting(const ModelManifold& model,
                                   const SolverConfig& config);

/// Finite differences: cell-centered finite-volume discretization of the
/// self-adjoint form (f^{n-1} u')' + lambda f^{n-1} u = 0 with a half-cell
/// at the pole, smallest eigenvalue by inverse power iteration with a
/// tridiagonal (Thomas) solve, Richardson-extrapolated over grids N/4, N/2,
/// N. The profile comes from the finest grid; derivatives by fourth-order
/// differences. Returns the normalized solution.
RadialEigenSolution solve_finite_difference(const ModelManifold& model,
                                            const SolverConfig& config);

/// Dispatch on config.method.
RadialEigenSolution solve(const ModelManifold& model,
                          const SolverConfig& config);

/// Rescales so sup v = 1 (attained at the pole) and clamps the boundary
/// value to exactly 0. Throws solver_error if the profile changes sign in
/// the interior (not the ground state) or does not vanish at the boundary.
RadialEigenSolution normalize(RadialEigenSolution solution);

/// Rayleigh quotient of the trial profile cos(pi r/(2R)) with weight
/// f^{n-1}: an upper bound for the first eigenvalue, used to seed the
/// shooting bracket. Exposed for tests.
double rayleigh_upper_bound(const ModelManifold& model);

/// Smallest eigenvalue of the single-grid finite-difference discretization
/// with `cells` cells, before Richardson extrapolation. Exposed so tests can
/// measure the second-order convergence rate directly.
double fd_level_eigenvalue(const ModelManifold& model, int cells);

}  // namespace eigenbound
