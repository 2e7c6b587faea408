#include "eigenbound/barrier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "eigenbound/quadrature.hpp"

namespace eigenbound {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// Branch switch radius in u = pi/2 - |t|: below it the closed form of
// xi .. xi''' gives way to the endpoint expansion.
constexpr double kSeriesRadius = 0.1;

// The fourth and fifth derivatives lose accuracy in the closed-form
// recursion well before u = 0.1 (each order divides by cos t once more), so
// they switch to the expansion further from the endpoint.
constexpr double kSeriesRadiusHigh = 0.25;

// Taylor coefficients of xi(pi/2 - u) about u = 0. All are exact:
// even-index entries are rational, odd-index entries rational multiples of
// pi. Twenty terms keep the truncation error of the fifth derivative below
// 1e-11 at u = 0.25.
constexpr std::array<double, 20> kSeries = {
    0.0,
    -2.0 * kPi / 3.0,
    1.0,
    -4.0 * kPi / 45.0,
    1.0 / 9.0,
    -4.0 * kPi / 315.0,
    2.0 / 135.0,
    -8.0 * kPi / 4725.0,
    1.0 / 525.0,
    -4.0 * kPi / 18711.0,
    2.0 / 8505.0,
    -5528.0 * kPi / 212837625.0,
    1382.0 / 49116375.0,
    -8.0 * kPi / 2606175.0,
    4.0 / 1216215.0,
    -57872.0 * kPi / 162820783125.0,
    3617.0 / 9577693125.0,
    -175468.0 * kPi / 4331032831125.0,
    87734.0 / 2051541867375.0,
    -1396888.0 * kPi / 306265893058125.0,
};

// d-th derivative with respect to u of the expansion, by Horner evaluation
// of sum_{k>=d} c_k * k!/(k-d)! * u^(k-d).
double series_derivative(double u, int d) {
    double acc = 0.0;
    for (int k = static_cast<int>(kSeries.size()) - 1; k >= d; --k) {
        double fall = 1.0;
        for (int j = 0; j < d; ++j) fall *= static_cast<double>(k - j);
        acc = acc * u + kSeries[static_cast<std::size_t>(k)] * fall;
    }
    return acc;
}

struct RawJet {
    double v0 = 0.0, v1 = 0.0, v2 = 0.0, v3 = 0.0, v4 = 0.0, v5 = 0.0;
};

// Direct evaluation for t in [0, pi/2 - 0.1]. The first derivative uses
// xi' = 4t + 2 sin t * N / cos^3 t with the shared numerator N, and each
// higher derivative is solved out of the identity one order below, so the
// low-order residual checks measure only rounding noise on this branch.
RawJet closed_jet(double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double c2 = c * c;
    const double num = c2 + 2.0 * t * s * c + t * t - kPi * kPi / 4.0;
    RawJet j;
    j.v0 = num / c2;
    j.v1 = 4.0 * t + 2.0 * s * num / (c2 * c);
    j.v2 = 2.0 * (2.0 * c2 + j.v0 + j.v1 * c * s) / c2;
    j.v3 = (-8.0 * s + 4.0 * j.v2 * s + 4.0 * j.v1 * c) / c;
    j.v4 = (5.0 * j.v3 * s + 8.0 * j.v2 * c - 4.0 * j.v1 * s - 8.0 * c) / c;
    j.v5 = (6.0 * j.v4 * s + 13.0 * j.v3 * c - 12.0 * j.v2 * s -
            4.0 * j.v1 * c + 8.0 * s) / c;
    return j;
}

// Jet at tabs in [0, pi/2]; derivatives are with respect to t, hence the
// sign flips on odd orders of the u-expansion (u = pi/2 - t on this side).
RawJet positive_jet(double tabs) {
    const double u = std::max(0.0, kHalfPi - tabs);
    RawJet j;
    if (u < kSeriesRadius) {
        j.v0 = series_derivative(u, 0);
        j.v1 = -series_derivative(u, 1);
        j.v2 = series_derivative(u, 2);
        j.v3 = -series_derivative(u, 3);
    } else {
        j = closed_jet(tabs);
    }
    if (u < kSeriesRadiusHigh) {
        j.v4 = series_derivative(u, 4);
        j.v5 = -series_derivative(u, 5);
    }
    return j;
}

double checked_abs_t(double t, const char* caller) {
    const double tabs = std::abs(t);
    if (!(tabs <= kHalfPi + 1e-12)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "%s: t = %.17g lies outside [-pi/2, pi/2]",
                      caller, t);
        throw invalid_input(msg);
    }
    return std::min(tabs, kHalfPi);
}

// xi is even, so odd-order derivatives flip sign for negative t.
RawJet signed_jet(double t, const char* caller) {
    RawJet j = positive_jet(checked_abs_t(t, caller));
    if (t < 0.0) {
        j.v1 = -j.v1;
        j.v3 = -j.v3;
        j.v5 = -j.v5;
    }
    return j;
}

double max_abs(std::initializer_list<double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

double xi(double t) { return signed_jet(t, "xi").v0; }

XiEvaluation xi_derivatives(double t) {
    const RawJet j = signed_jet(t, "xi_derivatives");
    return XiEvaluation{t, j.v0, j.v1, j.v2, j.v3};
}

XiJet xi_jet(double t) {
    const RawJet j = signed_jet(t, "xi_jet");
    return XiJet{t, j.v0, j.v1, j.v2, j.v3, j.v4, j.v5};
}

ZEvaluation z_eval(double t, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        char msg[80];
        std::snprintf(msg, sizeof msg, "z_eval: delta = %.17g lies outside [0, 1]",
                      delta);
        throw invalid_input(msg);
    }
    const RawJet j = signed_jet(t, "z_eval");
    return ZEvaluation{1.0 + delta * j.v0, delta * j.v1, delta * j.v2};
}

double xi_ode_residual(double t) {
    const RawJet j = signed_jet(t, "xi_ode_residual");
    const double c = std::cos(t);
    const double s = std::sin(t);
    return 0.5 * j.v2 * c * c - j.v1 * c * s - j.v0 - 2.0 * c * c;
}

double xi_identity_residual(double t) {
    const RawJet j = signed_jet(t, "xi_identity_residual");
    const double c = std::cos(t);
    const double s = std::sin(t);
    return j.v1 * c - 2.0 * j.v0 * s - 4.0 * t * c;
}

double z_ode_residual(double t, double delta) {
    const ZEvaluation ze = z_eval(t, delta);
    const double c = std::cos(t);
    const double s = std::sin(t);
    return 0.5 * ze.z2 * c * c - ze.z1 * c * s - ze.z -
           (-1.0 + 2.0 * delta * c * c);
}

double barrier_inequality_rhs(double t0, double z, double z1, double z2,
                              double delta) {
    checked_abs_t(t0, "barrier_inequality_rhs");
    if (!(z > 0.0)) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "barrier_inequality_rhs: z = %.17g must be positive at a "
                      "contact point", z);
        throw invalid_input(msg);
    }
    const double c = std::cos(t0);
    const double s = std::sin(t0);
    return 0.5 * z2 * c * c - z1 * c * s - z + 1.0 - 2.0 * delta * c * c;
}

double xi_integral(double a, double b, double abs_tol) {
    if (!(a >= -kHalfPi - 1e-12 && b <= kHalfPi + 1e-12 && a <= b)) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "xi_integral: [%.17g, %.17g] is not a subinterval of "
                      "[-pi/2, pi/2]", a, b);
        throw invalid_input(msg);
    }
    const double lo = std::max(a, -kHalfPi);
    const double hi = std::min(b, kHalfPi);
    const std::array<double, 2> cuts = {-(kHalfPi - kSeriesRadius),
                                        kHalfPi - kSeriesRadius};
    return integrate_piecewise([](double t) { return xi(t); }, lo, hi, cuts,
                               abs_tol);
}

XiResiduals xi_residual_set(double t) {
    const RawJet j = signed_jet(t, "xi_residual_set");
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double c2 = c * c;
    const double w = 1.0 + c2;

    XiResiduals r;

    {
        const double t1 = 0.5 * j.v2 * c2;
        const double t2 = -j.v1 * c * s;
        const double rhs = 2.0 * c2;
        r.ode2.raw = t1 + t2 - j.v0 - rhs;
        r.ode2.scale = 1.0 + max_abs({t1, t2, j.v0, rhs});
    }
    {
        const double t1 = j.v1 * c;
        const double t2 = -2.0 * j.v0 * s;
        const double rhs = 4.0 * t * c;
        r.first_order.raw = t1 + t2 - rhs;
        r.first_order.scale = 1.0 + max_abs({t1, t2, rhs});
    }
    {
        // q = xi': (1/2) q'' cos t - 2 q' sin t - 2 q cos t = -4 sin t.
        const double t1 = 0.5 * j.v3 * c;
        const double t2 = -2.0 * j.v2 * s;
        const double t3 = -2.0 * j.v1 * c;
        const double rhs = -4.0 * s;
        r.q_ode.raw = t1 + t2 + t3 - rhs;
        r.q_ode.scale = 1.0 + max_abs({t1, t2, t3, rhs});
    }
    {
        const double a_lead = c2 / (2.0 * w);
        const double t1 = a_lead * j.v4;
        const double t2 = -2.0 * c * s / w * j.v3;
        const double t3 = -2.0 * j.v2;
        const double rhs = -4.0 / w;
        r.q1_ode.raw = t1 + t2 + t3 - rhs;
        r.q1_ode.scale = 1.0 + max_abs({t1, t2, t3, rhs});
    }
    {
        const double a_lead = c2 / (2.0 * w);
        const double w2 = w * w;
        const double t1 = a_lead * j.v5;
        const double t2 = -c * s * (3.0 + 2.0 * c2) / w2 * j.v4;
        const double t3 = -2.0 * (5.0 * c2 + c2 * c2) / w2 * j.v3;
        const double rhs = -8.0 * c * s / w2;
        r.q2_ode.raw = t1 + t2 + t3 - rhs;
        r.q2_ode.scale = 1.0 + max_abs({t1, t2, t3, rhs});
    }
    return r;
}

bool XiReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const XiPropertyOutcome& p) { return p.passed; });
}

XiReport lemma5_property_suite(int grid_size, double tol) {
    if (grid_size < 101)
        throw invalid_input("lemma5_property_suite: grid_size must be >= 101");
    if (!(tol > 0.0))
        throw invalid_input("lemma5_property_suite: tol must be positive");

    const double value_tol = tol / 10.0;   // endpoint and extremum values
    const double slack = 1e-12;            // sign / monotonicity statements

    // Uniform grid over [-pi/2, pi/2], mirrored exactly so the symmetry
    // checks are not polluted by rounding of the node coordinates.
    const int g = grid_size;
    std::vector<double> ts(static_cast<std::size_t>(g));
    std::vector<XiJet> jets(static_cast<std::size_t>(g));
    const double h = kPi / static_cast<double>(g - 1);
    for (int i = 0; i < g / 2; ++i) {
        const double t = (i == 0) ? -kHalfPi : -kHalfPi + h * static_cast<double>(i);
        ts[static_cast<std::size_t>(i)] = t;
        ts[static_cast<std::size_t>(g - 1 - i)] = -t;
    }
    if (g % 2 == 1) ts[static_cast<std::size_t>((g - 1) / 2)] = 0.0;
    for (int i = 0; i < g; ++i)
        jets[static_cast<std::size_t>(i)] = xi_jet(ts[static_cast<std::size_t>(i)]);
    const int mid = (g % 2 == 1) ? (g - 1) / 2 : -1;  // index of t = 0, if any

    XiReport report;
    report.grid_size = g;
    report.tol = tol;
    auto push = [&report](const char* id, const char* tag, double worst,
                          double threshold) {
        report.properties.push_back(XiPropertyOutcome{
            id, tag, worst, threshold, std::abs(worst) <= threshold});
    };

    // The five differential identities, residuals relative to 1 + largest term.
    double worst_ode2 = 0.0, worst_first = 0.0, worst_q = 0.0, worst_q1 = 0.0,
           worst_q2 = 0.0;
    for (int i = 0; i < g; ++i) {
        const XiResiduals r = xi_residual_set(ts[static_cast<std::size_t>(i)]);
        worst_ode2 = std::max(worst_ode2, std::abs(r.ode2.relative()));
        worst_first = std::max(worst_first, std::abs(r.first_order.relative()));
        worst_q = std::max(worst_q, std::abs(r.q_ode.relative()));
        worst_q1 = std::max(worst_q1, std::abs(r.q1_ode.relative()));
        worst_q2 = std::max(worst_q2, std::abs(r.q2_ode.relative()));
    }
    push("xi-second-order-ode", "eq36", worst_ode2, tol);
    push("xi-first-order-identity", "eq37", worst_first, tol);
    push("q-second-order-ode", "eq39", worst_q, tol);
    push("q-prime-ode", "eq41", worst_q1, tol);
    push("q-double-prime-ode", "eq42", worst_q2, tol);

    // Integral of xi over [0, pi/2] equals -pi/2.
    {
        const double integral = xi_integral(0.0, kHalfPi, std::min(tol, 1e-10));
        push("integral-over-half-period", "lemma5-integral",
             std::abs(integral + kHalfPi), tol);
    }

    // Values: xi(+-pi/2) = 0, xi(0) = 1 - pi^2/4, and the range
    // xi(0) <= xi(t) <= 0 on the whole grid.
    {
        const double xi0_exact = 1.0 - kPi * kPi / 4.0;
        double worst = std::max(std::abs(jets.front().v0),
                                std::abs(jets.back().v0));
        if (mid >= 0)
            worst = std::max(worst,
                             std::abs(jets[static_cast<std::size_t>(mid)].v0 -
                                      xi0_exact));
        for (const XiJet& j : jets) {
            worst = std::max(worst, std::max(0.0, j.v0));          // xi <= 0
            worst = std::max(worst, std::max(0.0, xi0_exact - j.v0));
        }
        push("value-range-and-endpoints", "lemma5-values", worst, value_tol);
    }

    // xi' is increasing, with xi'(+-pi/2) = +-2 pi/3.
    {
        double worst = std::max(std::abs(jets.front().v1 + 2.0 * kPi / 3.0),
                                std::abs(jets.back().v1 - 2.0 * kPi / 3.0));
        for (int i = 0; i + 1 < g; ++i)
            worst = std::max(worst,
                             std::max(0.0, jets[static_cast<std::size_t>(i)].v1 -
                                           jets[static_cast<std::size_t>(i + 1)].v1));
        push("d1-increasing-and-endpoints", "lemma5-d1", worst, value_tol);
    }

    // Sign of xi': negative left of 0, zero at 0, positive right of 0.
    {
        double worst = 0.0;
        for (int i = 0; i < g; ++i) {
            const double t = ts[static_cast<std::size_t>(i)];
            const double v1 = jets[static_cast<std::size_t>(i)].v1;
            if (t < 0.0) worst = std::max(worst, v1);
            else if (t > 0.0) worst = std::max(worst, -v1);
            else worst = std::max(worst, std::abs(v1));
        }
        push("d1-sign-pattern", "lemma5-d1-sign", worst, slack);
    }

    // xi'' is positive, with xi''(+-pi/2) = 2 and xi''(0) = 2(3 - pi^2/4).
    {
        double worst = std::max(std::abs(jets.front().v2 - 2.0),
                                std::abs(jets.back().v2 - 2.0));
        if (mid >= 0)
            worst = std::max(worst,
                             std::abs(jets[static_cast<std::size_t>(mid)].v2 -
                                      2.0 * (3.0 - kPi * kPi / 4.0)));
        for (const XiJet& j : jets) worst = std::max(worst, -j.v2);
        push("d2-positive-and-endpoints", "lemma5-d2", worst, value_tol);
    }

    // xi'/t increases in |t| and stays inside [2(3 - pi^2/4), 4/3].
    {
        const double lo = 2.0 * (3.0 - kPi * kPi / 4.0);
        const double hi = 4.0 / 3.0;
        double worst = 0.0;
        double prev = (mid >= 0) ? jets[static_cast<std::size_t>(mid)].v2 : -1.0;
        bool have_prev = mid >= 0;  // ratio -> xi''(0) as t -> 0
        for (int i = 0; i < g; ++i) {
            const double t = ts[static_cast<std::size_t>(i)];
            if (t <= 0.0) continue;
            const double ratio = jets[static_cast<std::size_t>(i)].v1 / t;
            worst = std::max(worst, lo - ratio);
            worst = std::max(worst, ratio - hi);
            if (have_prev) worst = std::max(worst, prev - ratio);
            prev = ratio;
            have_prev = true;
        }
        push("d1-over-t-monotone-range", "lemma5-ratio", worst, slack);
    }

    // Sign of xi''' matches the sign of t, with xi'''(+-pi/2) = +-8 pi/15.
    {
        double worst = std::max(std::abs(jets.front().v3 + 8.0 * kPi / 15.0),
                                std::abs(jets.back().v3 - 8.0 * kPi / 15.0));
        for (int i = 0; i < g; ++i) {
            const double t = ts[static_cast<std::size_t>(i)];
            const double v3 = jets[static_cast<std::size_t>(i)].v3;
            if (t < 0.0) worst = std::max(worst, v3);
            else if (t > 0.0) worst = std::max(worst, -v3);
            else worst = std::max(worst, std::abs(v3));
        }
        push("d3-sign-and-endpoints", "lemma5-d3", worst, value_tol);
    }

    // Evenness of the full jet under t -> -t.
    {
        double worst = 0.0;
        for (int i = 0; i < g / 2; ++i) {
            const XiJet& a = jets[static_cast<std::size_t>(i)];
            const XiJet& b = jets[static_cast<std::size_t>(g - 1 - i)];
            worst = std::max(worst, max_abs({a.v0 - b.v0, a.v1 + b.v1,
                                             a.v2 - b.v2, a.v3 + b.v3,
                                             a.v4 - b.v4, a.v5 + b.v5}));
        }
        push("evenness", "lemma5-even", worst, 1e-14);
    }

    return report;
}

}  // namespace eigenbound
