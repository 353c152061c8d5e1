#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "axion/ode.hpp"
#include "axion/special_functions.hpp"

using namespace axion;

TEST_CASE("exponential growth reproduces e") {
    OdeSystem sys{1, [](double, const double* y, double* dy) { dy[0] = y[0]; }};
    auto y = integrate_to(sys, 0.0, 1.0, {1.0});
    CHECK(std::abs(y[0] - std::exp(1.0)) < 1e-9);
}

TEST_CASE("Bessel ODE cross-check against bessel_j") {
    // x^2 y'' + x y' + x^2 y = 0, started from J0 data at x = 1.
    OdeSystem sys{2, [](double x, const double* y, double* dy) {
                      dy[0] = y[1];
                      dy[1] = -y[1] / x - y[0];
                  }};
    const auto p1 = sf::bessel_jy(0.0, 1.0);
    auto y = integrate_to(sys, 1.0, 2.0, {p1.j, p1.jp});
    CHECK(std::abs(y[0] - sf::bessel_j(0.0, 2.0)) < 1e-8);
}

TEST_CASE("Airy ODE cross-check against airy_ai") {
    OdeSystem sys{2, [](double x, const double* y, double* dy) {
                      dy[0] = y[1];
                      dy[1] = x * y[0];
                  }};
    auto y = integrate_to(sys, 0.0, 1.0, {sf::airy_ai(0.0), sf::airy_ai_deriv(0.0)});
    CHECK(std::abs(y[0] - sf::airy_ai(1.0)) < 1e-8);
}

TEST_CASE("dense profile interpolates to 1e-7 under dyadic refinement") {
    OdeSystem sys{2, [](double, const double* y, double* dy) {
                      dy[0] = y[1];
                      dy[1] = -y[0];
                  }};
    sys.rhs = [](double, const double* y, double* dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    };
    auto prof = integrate_dense(sys, 0.0, 6.0, {1.0, 0.0});
    prof.pair_of = {1, -1};
    double worst = 0.0, worst_smooth = 0.0;
    for (int k = 0; k <= 600; ++k) {
        const double w = 6.0 * k / 600.0;
        worst = std::max(worst, std::abs(prof.interpolate(w)[0] - std::cos(w)));
        worst_smooth = std::max(worst_smooth, std::abs(prof.smooth_component(w, 0) - std::cos(w)));
    }
    CHECK(worst < 1e-7);
    CHECK(worst_smooth < 1e-10);
}

TEST_CASE("backward integration works and profiles stay ascending") {
    OdeSystem sys{1, [](double, const double* y, double* dy) { dy[0] = -y[0]; }};
    auto prof = integrate_dense(sys, 2.0, 0.5, {std::exp(-2.0)});
    CHECK(prof.omega.front() < prof.omega.back());
    CHECK(std::abs(prof.interpolate(1.0)[0] - std::exp(-1.0)) < 1e-9);
}

TEST_CASE("finite-time blowup underflows the step") {
    OdeSystem sys{1, [](double, const double* y, double* dy) { dy[0] = y[0] * y[0]; }};
    CHECK_THROWS_AS(integrate_to(sys, 0.0, 2.0, {1.0}), StepUnderflow);
}

TEST_CASE("range queries outside the profile raise") {
    OdeSystem sys{1, [](double, const double*, double* dy) { dy[0] = 1.0; }};
    auto prof = integrate_dense(sys, 0.0, 1.0, {0.0});
    CHECK_THROWS_AS(prof.interpolate(1.5), ProfileRangeExceeded);
}
