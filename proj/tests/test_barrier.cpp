#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "eigenbound/barrier.hpp"
#include "oracles.hpp"

using namespace eigenbound;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// Absolute tolerances per derivative order against the reference table.
// They follow the measured branch accuracy: the closed form loses digits
// toward the endpoint (worst at the switch radius), the expansion is clean.
constexpr double kOrderTol[6] = {1e-12, 1e-12, 2e-11, 1e-9, 1e-9, 2e-8};

// The closed form, written out independently of the library internals.
double closed_value(double t) {
    const double c = std::cos(t);
    return (c * c + 2.0 * t * std::sin(t) * c + t * t - kPi * kPi / 4.0) /
           (c * c);
}

}  // namespace

TEST_CASE("xi jet matches the high-precision table on both branches") {
    for (const auto& row : oracles::kXiTable) {
        const XiJet j = xi_jet(row.t);
        const double got[6] = {j.v0, j.v1, j.v2, j.v3, j.v4, j.v5};
        for (int d = 0; d < 6; ++d) {
            INFO("t = ", row.t, ", order = ", d);
            CHECK(std::abs(got[d] - row.v[d]) <= kOrderTol[d]);
        }
    }
}

TEST_CASE("endpoint and center values are exact") {
    CHECK(xi(kHalfPi) == 0.0);
    CHECK(xi(-kHalfPi) == 0.0);
    CHECK(std::abs(xi(0.0) - (1.0 - kPi * kPi / 4.0)) < 1e-15);
    CHECK(std::abs(xi(0.0) - oracles::kXiAtZero) < 1e-15);

    const XiEvaluation e = xi_derivatives(kHalfPi);
    CHECK(std::abs(e.d1 - 2.0 * kPi / 3.0) < 1e-15);
    CHECK(std::abs(e.d2 - 2.0) < 1e-15);
    CHECK(std::abs(e.d3 - 8.0 * kPi / 15.0) < 1e-14);

    const XiEvaluation z = xi_derivatives(0.0);
    CHECK(z.d1 == 0.0);
    CHECK(std::abs(z.d2 - oracles::kXi2AtZero) < 1e-15);
    CHECK(z.d3 == 0.0);

    const XiJet jend = xi_jet(kHalfPi);
    CHECK(std::abs(jend.v4 - 8.0 / 3.0) < 1e-15);
    CHECK(std::abs(jend.v5 - 32.0 * kPi / 21.0) < 1e-14);
}

TEST_CASE("xi is even and its odd derivatives are odd") {
    for (double t : {0.2, 0.9, 1.3, 1.5, 1.56}) {
        const XiJet p = xi_jet(t);
        const XiJet m = xi_jet(-t);
        CHECK(p.v0 == m.v0);
        CHECK(p.v1 == -m.v1);
        CHECK(p.v2 == m.v2);
        CHECK(p.v3 == -m.v3);
        CHECK(p.v4 == m.v4);
        CHECK(p.v5 == -m.v5);
    }
    // Independently of the symmetry shortcut, the raw formula agrees at a
    // negative argument.
    CHECK(std::abs(xi(-1.0) - closed_value(-1.0)) < 1e-13);
}

TEST_CASE("the two evaluation branches agree on the overlap band") {
    // On pi/2 - |t| in [0.02, 0.1] the library uses the expansion; the
    // closed form is still accurate enough there to cross-check the value
    // to 1e-11.
    for (double u = 0.02; u <= 0.1; u += 0.005) {
        const double t = kHalfPi - u;
        CHECK(std::abs(xi(t) - closed_value(t)) < 1e-11);
    }
    // Continuity across the switch radius itself.
    const double ts = kHalfPi - 0.1;
    CHECK(std::abs(xi(ts + 1e-9) - xi(ts - 1e-9)) < 1e-8);
    const XiEvaluation below = xi_derivatives(ts - 1e-12);
    const XiEvaluation above = xi_derivatives(ts + 1e-12);
    // The genuine variation over the 2e-12 step is xi' * 2e-12 ~ 3.8e-12;
    // anything beyond that bounds the branch mismatch itself.
    CHECK(std::abs(below.value - above.value) < 5e-12);
    CHECK(std::abs(below.d1 - above.d1) < 1e-11);
    CHECK(std::abs(below.d2 - above.d2) < 1e-10);
    CHECK(std::abs(below.d3 - above.d3) < 1e-8);
}

TEST_CASE("differential identities hold pointwise") {
    for (double t : {-1.5, -0.7, 0.0, 0.25, 0.9, 1.3, 1.47, 1.52, 1.56,
                     kHalfPi}) {
        INFO("t = ", t);
        CHECK(std::abs(xi_ode_residual(t)) < 1e-12);
        CHECK(std::abs(xi_identity_residual(t)) < 1e-12);
        const XiResiduals r = xi_residual_set(t);
        CHECK(std::abs(r.ode2.relative()) < 1e-12);
        CHECK(std::abs(r.first_order.relative()) < 1e-12);
        CHECK(std::abs(r.q_ode.relative()) < 1e-11);
        CHECK(std::abs(r.q1_ode.relative()) < 5e-10);
        CHECK(std::abs(r.q2_ode.relative()) < 1e-9);
    }
}

TEST_CASE("a perturbed profile breaks the second-order identity") {
    // Shifting xi by +0.01 shifts the residual by -0.01: the check is alive.
    const double t = 0.8;
    const XiJet j = xi_jet(t);
    const double c = std::cos(t), s = std::sin(t);
    const double res = 0.5 * j.v2 * c * c - j.v1 * c * s - (j.v0 + 0.01) -
                       2.0 * c * c;
    CHECK(std::abs(res + 0.01) < 1e-12);
    CHECK(std::abs(res) > 1e-3);
}

TEST_CASE("xi integrates to the closed-form values") {
    CHECK(std::abs(xi_integral(0.0, kHalfPi) + kHalfPi) < 1e-9);
    CHECK(std::abs(xi_integral(-kHalfPi, kHalfPi) + kPi) < 2e-9);
    CHECK(std::abs(xi_integral(0.0, 1.0) - oracles::kXiIntegral_0_1) < 1e-9);
    CHECK(std::abs(xi_integral(0.3, 1.2) - oracles::kXiIntegral_03_12) < 1e-9);
    CHECK(xi_integral(0.4, 0.4) == 0.0);
}

TEST_CASE("z blends xi into the barrier profile") {
    const ZEvaluation z0 = z_eval(0.0, 0.25);
    CHECK(std::abs(z0.z - oracles::kZAtZeroDeltaQuarter) < 1e-15);
    CHECK(z0.z1 == 0.0);

    const ZEvaluation zend = z_eval(kHalfPi, 0.25);
    CHECK(zend.z == 1.0);
    CHECK(std::abs(zend.z1 - 0.25 * 2.0 * kPi / 3.0) < 1e-15);

    const ZEvaluation zero = z_eval(0.7, 0.0);
    CHECK(zero.z == 1.0);
    CHECK(zero.z1 == 0.0);
    CHECK(zero.z2 == 0.0);

    // Positivity over the whole admissible delta range:
    // z(0) = 1 - delta (pi^2/4 - 1) > 0 up to the proof ceiling 1/4.
    for (double delta : {0.05, 0.1, 0.2, 0.25}) {
        for (double t = -kHalfPi; t <= kHalfPi + 1e-9; t += 0.01)
            CHECK(z_eval(std::min(t, kHalfPi), delta).z > 0.0);
    }
}

TEST_CASE("z satisfies its differential equation for every delta") {
    for (double delta : {0.0, 0.1, 0.25, 0.4}) {
        for (double t : {-1.5, -0.3, 0.0, 0.7, 1.2, 1.5, kHalfPi}) {
            INFO("delta = ", delta, ", t = ", t);
            CHECK(std::abs(z_ode_residual(t, delta)) < 1e-12);
        }
    }
}

TEST_CASE("barrier inequality: equality on the profile, strict otherwise") {
    const double delta = 0.2;
    for (double t : {-1.2, 0.0, 0.5, 1.0, 1.5}) {
        const ZEvaluation z = z_eval(t, delta);
        // Along z = 1 + delta xi the inequality is an identity.
        CHECK(std::abs(barrier_inequality_rhs(t, z.z, z.z1, z.z2, delta)) <
              1e-12);
        // A constant upward shift makes it strictly negative by the shift.
        const double shifted =
            barrier_inequality_rhs(t, z.z + 0.05, z.z1, z.z2, delta);
        CHECK(std::abs(shifted + 0.05) < 1e-12);
        CHECK(shifted < 0.0);
    }
    // The constant profile z = 1 fails against delta > 0 by -2 delta cos^2 t,
    // vanishing only at the endpoints.
    CHECK(std::abs(barrier_inequality_rhs(0.0, 1.0, 0.0, 0.0, 0.25) + 0.5) <
          1e-15);
    CHECK(std::abs(barrier_inequality_rhs(kHalfPi, 1.0, 0.0, 0.0, 0.25)) <
          1e-15);
}

TEST_CASE("property suite passes and lists each property once") {
    const XiReport report = lemma5_property_suite(2001);
    CHECK(report.grid_size == 2001);
    CHECK(report.all_passed());
    CHECK(report.properties.size() == 13);

    std::set<std::string> ids;
    for (const auto& p : report.properties) {
        CAPTURE(p.id);
        CHECK(p.passed);
        CHECK(ids.insert(p.id).second);  // no duplicates
    }
    for (const char* expected :
         {"xi-second-order-ode", "xi-first-order-identity",
          "q-second-order-ode", "q-prime-ode", "q-double-prime-ode",
          "integral-over-half-period", "value-range-and-endpoints",
          "d1-increasing-and-endpoints", "d1-sign-pattern",
          "d2-positive-and-endpoints", "d1-over-t-monotone-range",
          "d3-sign-and-endpoints", "evenness"}) {
        CHECK(ids.count(expected) == 1);
    }
}

TEST_CASE("property suite fails under an unreachable tolerance") {
    const XiReport report = lemma5_property_suite(501, 1e-16);
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("ratio xi'/t stays inside its proven range") {
    for (double t = 0.01; t < kHalfPi; t += 0.01) {
        const double ratio = xi_derivatives(t).d1 / t;
        CHECK(ratio >= oracles::kXi2AtZero - 1e-12);
        CHECK(ratio <= 4.0 / 3.0 + 1e-12);
    }
}

TEST_CASE("domain and argument errors") {
    CHECK_THROWS_AS(xi(1.7), invalid_input);
    CHECK_THROWS_AS(xi(-2.0), invalid_input);
    CHECK_THROWS_AS(xi_derivatives(3.2), invalid_input);
    CHECK_THROWS_AS(z_eval(0.2, -0.1), invalid_input);
    CHECK_THROWS_AS(z_eval(0.2, 1.5), invalid_input);
    CHECK_THROWS_AS(barrier_inequality_rhs(0.2, 0.0, 0.0, 0.0, 0.1),
                    invalid_input);
    CHECK_THROWS_AS(barrier_inequality_rhs(0.2, -1.0, 0.0, 0.0, 0.1),
                    invalid_input);
    CHECK_THROWS_AS(xi_integral(-2.0, 0.0), invalid_input);
    CHECK_THROWS_AS(xi_integral(0.5, 0.2), invalid_input);
    CHECK_THROWS_AS(lemma5_property_suite(100), invalid_input);
    CHECK_THROWS_AS(lemma5_property_suite(2001, 0.0), invalid_input);

    // A hair beyond the endpoint from rounding is clamped, not rejected.
    CHECK(xi(kHalfPi + 5e-13) == 0.0);
    CHECK(xi(std::nextafter(kHalfPi, 2.0)) == 0.0);
}
