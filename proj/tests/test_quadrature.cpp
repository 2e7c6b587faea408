#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eigenbound/quadrature.hpp"

using eigenbound::integrate;
using eigenbound::integrate_piecewise;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("integrate reproduces elementary integrals") {
    CHECK(std::abs(integrate([](double x) { return x * x; }, 0.0, 1.0) -
                   1.0 / 3.0) < 1e-13);
    CHECK(std::abs(integrate([](double x) { return std::sin(x); }, 0.0, kPi) -
                   2.0) < 1e-12);
    CHECK(std::abs(integrate([](double x) { return std::exp(x); }, -1.0, 2.0) -
                   (std::exp(2.0) - std::exp(-1.0))) < 1e-11);
}

TEST_CASE("integrate handles degenerate and invalid intervals") {
    CHECK(integrate([](double) { return 7.0; }, 0.4, 0.4) == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 1.0, 0.0),
                    eigenbound::invalid_input);
}

TEST_CASE("integrate_piecewise splits at kinks") {
    // |x - 0.3| on [0, 1]: area = 0.3^2/2 + 0.7^2/2 = 0.29.
    const auto f = [](double x) { return std::abs(x - 0.3); };
    const double cuts[] = {0.3};
    CHECK(std::abs(integrate_piecewise(f, 0.0, 1.0, cuts) - 0.29) < 1e-12);
    // Breakpoints outside the interval are ignored.
    const double far[] = {-5.0, 12.0};
    CHECK(std::abs(integrate_piecewise([](double x) { return x; }, 0.0, 2.0,
                                       far) - 2.0) < 1e-13);
}

TEST_CASE("tolerance scales the effort") {
    const auto f = [](double x) { return std::cos(10.0 * x); };
    const double exact = std::sin(10.0) / 10.0;
    CHECK(std::abs(integrate(f, 0.0, 1.0, 1e-12) - exact) < 1e-11);
}
