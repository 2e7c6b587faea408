#include "eigenbound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace eigenbound {

namespace {

constexpr double kPi = std::numbers::pi;

double machine_tol_floor() {
    return 100.0 * std::numeric_limits<double>::epsilon();
}

// (n-1) f'/f without the public-domain checks; hot path of the integrator.
double radial_coefficient(const ModelManifold& model, double r) {
    if (model.n == 1) return 0.0;
    return (model.n - 1) * model.warp_derivative(r) / model.warp(r);
}

// Weight f(r)^(n-1) of the self-adjoint form. pow(0, 0) = 1 covers the
// interval case at the pole.
double warp_weight(const ModelManifold& model, double r) {
    return std::pow(model.warp(r), model.n - 1);
}

// --- shooting -------------------------------------------------------------

// Coefficient table at the nodes and half-nodes of the fixed RK4 grid; the
// coefficient does not depend on lambda, so it is shared by every shot.
struct ShootingGrid {
    double eps = 0.0;
    double h = 0.0;
    int steps = 0;
    std::vector<double> coeff;  // at eps + j*h/2, j = 0 .. 2*steps
};

ShootingGrid make_shooting_grid(const ModelManifold& model,
                                const SolverConfig& config) {
    ShootingGrid g;
    g.steps = config.grid_points;
    g.eps = config.effective_pole_offset(model.radius);
    g.h = (model.radius - g.eps) / g.steps;
    g.coeff.resize(static_cast<std::size_t>(2 * g.steps + 1));
    for (int j = 0; j <= 2 * g.steps; ++j) {
        const double r = g.eps + 0.5 * g.h * static_cast<double>(j);
        g.coeff[static_cast<std::size_t>(j)] =
            radial_coefficient(model, std::min(r, model.radius));
    }
    return g;
}

// Integrates the radial equation across the whole grid for a trial lambda.
// When out_u/out_w are given, the per-node profile is recorded.
double integrate_shot(const ModelManifold& model, const ShootingGrid& g,
                      double lambda, std::vector<double>* out_u = nullptr,
                      std::vector<double>* out_w = nullptr) {
    const double n = static_cast<double>(model.n);
    double u = 1.0 - lambda * g.eps * g.eps / (2.0 * n);
    double w = -lambda * g.eps / n;
    if (out_u) {
        out_u->clear();
        out_w->clear();
        out_u->push_back(u);
        out_w->push_back(w);
    }
    for (int i = 0; i < g.steps; ++i) {
        const double c0 = g.coeff[static_cast<std::size_t>(2 * i)];
        const double cm = g.coeff[static_cast<std::size_t>(2 * i + 1)];
        const double c1 = g.coeff[static_cast<std::size_t>(2 * i + 2)];
        const double h = g.h;
        const double k1u = w;
        const double k1w = -c0 * w - lambda * u;
        const double k2u = w + 0.5 * h * k1w;
        const double k2w = -cm * (w + 0.5 * h * k1w) - lambda * (u + 0.5 * h * k1u);
        const double k3u = w + 0.5 * h * k2w;
        const double k3w = -cm * (w + 0.5 * h * k2w) - lambda * (u + 0.5 * h * k2u);
        const double k4u = w + h * k3w;
        const double k4w = -c1 * (w + h * k3w) - lambda * (u + h * k3u);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
        if (out_u) {
            out_u->push_back(u);
            out_w->push_back(w);
        }
    }
    return u;
}

// --- finite differences ---------------------------------------------------

struct FdLevel {
    double lambda = 0.0;
    std::vector<double> x;  // nodes i*h, i = 0 .. N-1 (boundary value dropped)
};

// Symmetric tridiagonal solve (Thomas). Positive pivots certify that the
// discretization is positive definite; a nonpositive pivot means the warp
// produced an indefinite operator.
std::vector<double> thomas_spd(const std::vector<double>& main,
                               const std::vector<double>& off,
                               std::vector<double> rhs) {
    const std::size_t n = main.size();
    std::vector<double> diag(main);
    for (std::size_t i = 1; i < n; ++i) {
        if (!(diag[i - 1] > 0.0))
            throw solver_error(
                "finite differences: indefinite discretization (bad warp)");
        const double m = off[i - 1] / diag[i - 1];
        diag[i] -= m * off[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (!(diag[n - 1] > 0.0))
        throw solver_error(
            "finite differences: indefinite discretization (bad warp)");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        rhs[i] = (rhs[i] - off[i] * rhs[i + 1]) / diag[i];
    return rhs;
}

FdLevel fd_smallest_eigenvalue(const ModelManifold& model, int cells) {
    const int N = cells;
    const double h = model.radius / N;

    // Flux coefficients at the half-nodes, cell masses by Simpson.
    std::vector<double> a(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        a[static_cast<std::size_t>(i)] =
            warp_weight(model, (static_cast<double>(i) + 0.5) * h);
    auto cell_mass = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi);
        return (hi - lo) / 6.0 *
               (warp_weight(model, lo) + 4.0 * warp_weight(model, mid) +
                warp_weight(model, hi));
    };
    std::vector<double> mass(static_cast<std::size_t>(N));
    mass[0] = cell_mass(0.0, 0.5 * h);
    for (int i = 1; i < N; ++i)
        mass[static_cast<std::size_t>(i)] =
            cell_mass((static_cast<double>(i) - 0.5) * h,
                      (static_cast<double>(i) + 0.5) * h);

    std::vector<double> main(static_cast<std::size_t>(N));
    std::vector<double> off(static_cast<std::size_t>(N - 1));
    main[0] = a[0] / h;
    for (int i = 1; i < N; ++i)
        main[static_cast<std::size_t>(i)] =
            (a[static_cast<std::size_t>(i - 1)] + a[static_cast<std::size_t>(i)]) / h;
    for (int i = 0; i + 1 < N; ++i)
        off[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)] / h;

    // Inverse power iteration on A x = lambda M x with Rayleigh estimates.
    std::vector<double> x(static_cast<std::size_t>(N), 1.0);
    double lambda = 0.0, lambda_prev = -1.0;
    bool converged = false;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<double> b(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            b[static_cast<std::size_t>(i)] =
                mass[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        x = thomas_spd(main, off, b);

        double x_ax = 0.0, x_mx = 0.0;
        for (int i = 0; i < N; ++i) {
            double ax = main[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            if (i + 1 < N) ax += off[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i + 1)];
            if (i > 0) ax += off[static_cast<std::size_t>(i - 1)] * x[static_cast<std::size_t>(i - 1)];
            x_ax += x[static_cast<std::size_t>(i)] * ax;
            x_mx += x[static_cast<std::size_t>(i)] * mass[static_cast<std::size_t>(i)] *
                    x[static_cast<std::size_t>(i)];
        }
        if (!(x_mx > 0.0))
            throw solver_error("finite differences: iteration collapsed");
        lambda = x_ax / x_mx;
        const double norm = std::sqrt(x_mx);
        for (double& xi : x) xi /= norm;
        // Settle threshold 4e-12 relative: once the vector has converged the
        // Rayleigh quotient can flutter in a period-2 roundoff cycle of a
        // few 1e-13 relative (observed up to ~4e-13 on decaying-weight
        // warps), which must not be mistaken for lack of convergence. The
        // flutter amplitude is orders of magnitude below the O(h^2)
        // discretization error handled by Richardson extrapolation.
        if (std::abs(lambda - lambda_prev) <= 4e-12 * std::abs(lambda)) {
            converged = true;
            break;
        }
        lambda_prev = lambda;
    }
    if (!converged)
        throw solver_error("finite differences: iteration stalled before "
                           "reaching the eigenvalue tolerance");
    return FdLevel{lambda, std::move(x)};
}

// --- shared profile assembly ---------------------------------------------

std::vector<double> fourth_order_derivative(const std::vector<double>& v,
                                            double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n, 0.0);
    if (n < 5) return d;
    d[0] = 0.0;  // radial symmetry at the pole
    d[1] = (v[2] - v[0]) / (2.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) /
               (12.0 * h);
    d[n - 2] = (v[n - 1] - v[n - 3]) / (2.0 * h);
    d[n - 1] = (v[n - 3] - 4.0 * v[n - 2] + 3.0 * v[n - 1]) / (2.0 * h);
    return d;
}

}  // namespace

std::string_view to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::shooting: return "shooting";
        case SolveMethod::finite_difference: return "finite_difference";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (grid_points < 64)
        throw invalid_input("solver: grid_points must be >= 64");
    if (!(tolerance >= machine_tol_floor()))
        throw invalid_input(
            "solver: tolerance must be >= 100 * machine epsilon");
    if (pole_offset && !(*pole_offset > 0.0))
        throw invalid_input("solver: pole_offset must be > 0");
}

double SolverConfig::effective_pole_offset(double radius) const {
    const double eps = pole_offset ? *pole_offset : 1e-8 * radius;
    if (!(eps < radius))
        throw invalid_input("solver: pole_offset must be smaller than R");
    return eps;
}

double rayleigh_upper_bound(const ModelManifold& model) {
    const int m = 2048;
    const double r_max = model.radius;
    const double h = r_max / m;
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double r = (j == m) ? r_max : h * static_cast<double>(j);
        const double simpson_w =
            (j == 0 || j == m) ? 1.0 : ((j % 2 == 1) ? 4.0 : 2.0);
        const double weight = warp_weight(model, r) * simpson_w;
        const double phi = std::cos(kPi * r / (2.0 * r_max));
        const double dphi = -kPi / (2.0 * r_max) * std::sin(kPi * r / (2.0 * r_max));
        num += weight * dphi * dphi;
        den += weight * phi * phi;
    }
    if (!(den > 0.0)) throw solver_error("rayleigh quotient degenerated");
    return num / den;
}

RadialEigenSolution solve_shooting(const ModelManifold& model,
                                   const SolverConfig& config) {
    model.validate();
    config.validate();
    const ShootingGrid grid = make_shooting_grid(model, config);

    // Bracket [lo, hi]: u(R) > 0 below the eigenvalue, < 0 just above it.
    double hi = rayleigh_upper_bound(model);
    if (!std::isfinite(hi) || !(hi > 0.0))
        throw solver_error("shooting: Rayleigh seed is not positive");
    int doublings = 0;
    while (integrate_shot(model, grid, hi) > 0.0) {
        hi *= 2.0;
        if (++doublings > 60)
            throw solver_error("shooting: bracket failure, endpoint value "
                               "never changes sign");
    }
    double lo = 0.0;
    for (int iter = 0; iter < 400; ++iter) {
        if (hi - lo <= config.tolerance * std::max(1.0, hi)) break;
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (integrate_shot(model, grid, mid) > 0.0 ? lo : hi) = mid;
    }
    const double lambda = 0.5 * (lo + hi);

    // Final sweep at the converged eigenvalue, recording the profile.
    std::vector<double> u, w;
    integrate_shot(model, grid, lambda, &u, &w);

    RadialEigenSolution sol;
    sol.lambda = lambda;
    sol.method = SolveMethod::shooting;
    sol.d_tilde = model.in_diameter();
    sol.r_grid.reserve(u.size() + 1);
    sol.v.reserve(u.size() + 1);
    sol.v_prime.reserve(u.size() + 1);
    // Pole node from the regular series: u(0) = 1, u'(0) = 0.
    sol.r_grid.push_back(0.0);
    sol.v.push_back(1.0);
    sol.v_prime.push_back(0.0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double r = (j + 1 == u.size())
                             ? model.radius
                             : grid.eps + grid.h * static_cast<double>(j);
        sol.r_grid.push_back(r);
        sol.v.push_back(u[j]);
        sol.v_prime.push_back(w[j]);
    }
    return normalize(std::move(sol));
}

RadialEigenSolution solve_finite_difference(const ModelManifold& model,
                                            const SolverConfig& config) {
    model.validate();
    config.validate();
    // Three nested grids N/4, N/2, N for Richardson extrapolation of the
    // second-order scheme.
    const int n_fine = std::max(64, (config.grid_points / 4) * 4);
    const int n_mid = n_fine / 2;
    const int n_coarse = n_fine / 4;
    const FdLevel coarse = fd_smallest_eigenvalue(model, n_coarse);
    const FdLevel mid = fd_smallest_eigenvalue(model, n_mid);
    FdLevel fine = fd_smallest_eigenvalue(model, n_fine);
    const double a0 = (4.0 * mid.lambda - coarse.lambda) / 3.0;
    const double a1 = (4.0 * fine.lambda - mid.lambda) / 3.0;
    const double lambda = (16.0 * a1 - a0) / 15.0;

    RadialEigenSolution sol;
    sol.lambda = lambda;
    sol.method = SolveMethod::finite_difference;
    sol.d_tilde = model.in_diameter();
    const double h = model.radius / n_fine;
    sol.r_grid.resize(static_cast<std::size_t>(n_fine) + 1);
    sol.v.resize(static_cast<std::size_t>(n_fine) + 1);
    for (int i = 0; i < n_fine; ++i) {
        sol.r_grid[static_cast<std::size_t>(i)] = h * static_cast<double>(i);
        sol.v[static_cast<std::size_t>(i)] = fine.x[static_cast<std::size_t>(i)];
    }
    sol.r_grid.back() = model.radius;
    sol.v.back() = 0.0;
    sol.v_prime = fourth_order_derivative(sol.v, h);
    return normalize(std::move(sol));
}

RadialEigenSolution solve(const ModelManifold& model,
                          const SolverConfig& config) {
    return config.method == SolveMethod::shooting
               ? solve_shooting(model, config)
               : solve_finite_difference(model, config);
}

double fd_level_eigenvalue(const ModelManifold& model, int cells) {
    model.validate();
    if (cells < 16) throw invalid_input("fd_level_eigenvalue: cells < 16");
    return fd_smallest_eigenvalue(model, cells).lambda;
}

RadialEigenSolution normalize(RadialEigenSolution solution) {
    if (solution.v.size() < 3 || solution.v.size() != solution.r_grid.size() ||
        solution.v.size() != solution.v_prime.size())
        throw solver_error("normalize: malformed profile");

    // Orient so the extremum of largest magnitude is positive.
    std::size_t imax = 0;
    for (std::size_t i = 1; i < solution.v.size(); ++i)
        if (std::abs(solution.v[i]) > std::abs(solution.v[imax])) imax = i;
    if (solution.v[imax] < 0.0) {
        for (double& x : solution.v) x = -x;
        for (double& x : solution.v_prime) x = -x;
    }
    const double sup = solution.v[imax];
    if (!(sup > 0.0)) throw solver_error("normalize: profile vanishes");

    for (double& x : solution.v) x /= sup;
    for (double& x : solution.v_prime) x /= sup;

    if (std::abs(solution.v.back()) > 1e-6)
        throw solver_error(
            "normalize: profile does not vanish at the boundary");
    // The first eigenfunction has one sign: no interior zero crossing.
    for (std::size_t i = 0; i + 1 < solution.v.size(); ++i) {
        if (solution.v[i] <= 0.0)
            throw solver_error(
                "normalize: interior zero, not the first eigenfunction");
    }
    solution.v.back() = 0.0;
    return solution;
}

}  // namespace eigenbound
