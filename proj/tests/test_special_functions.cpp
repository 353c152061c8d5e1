#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "axion/special_functions.hpp"
#include "oracles.hpp"

using namespace axion;

TEST_CASE("bessel_j against the integral representation") {
    for (double x : {0.3, 0.9, 2.5, 7.0, 14.0, 33.0, 49.0}) {
        for (int n : {0, 1, 2, 5}) {
            const double ref = oracles::bessel_j_int(n, x);
            CHECK(std::abs(sf::bessel_j(n, x) - ref) < 1e-11 * (1.0 + std::abs(ref)));
        }
    }
}

TEST_CASE("bessel small-argument leading terms") {
    CHECK(std::abs(sf::bessel_j(0, 1e-8) - 1.0) < 1e-10);
    const double j1 = sf::bessel_j(1, 1e-8);
    CHECK(std::abs(j1 - 5e-9) < 1e-12);  // J_1(x) ~ x/2
}

TEST_CASE("first zero of J0 located by an independent oracle") {
    auto j0 = [](double x) { return oracles::bessel_j_int(0, x); };
    const double z0 = oracles::bisect(j0, 2.0, 3.0);
    CHECK(std::abs(z0 - 2.404825557695773) < 1e-10);
    CHECK(std::abs(sf::bessel_j(0, 2.404825557695773)) < 1e-9);
}

TEST_CASE("modified bessel against quadrature oracles") {
    for (double x : {0.6, 1.7, 4.0, 9.0}) {
        for (double nu : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            const double kref = oracles::bessel_k_quad(nu, x);
            CHECK(std::abs(sf::bessel_k(nu, x) - kref) < 1e-10 * (1.0 + std::abs(kref)));
            const double iref = oracles::bessel_i_quad(nu, x);
            CHECK(std::abs(sf::bessel_i(nu, x) - iref) < 1e-9 * (1.0 + std::abs(iref)));
        }
    }
}

TEST_CASE("J/Y Wronskian identity") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (double x = 0.5; x <= 20.0; x += 0.75) {
            const auto p = sf::bessel_jy(nu, x);
            const double w = p.j * p.yp - p.jp * p.y;
            const double expect = 2.0 / (oracles::kPi * x);
            CHECK(std::abs(w - expect) < 1e-9 * std::abs(expect));
        }
    }
}

TEST_CASE("J/Y derivative pair consistent with numeric differentiation") {
    const double h = 1e-5;
    for (double nu : {0.0, 1.0, 2.5}) {
        for (double x : {1.3, 6.0, 17.0}) {
            const auto p = sf::bessel_jy(nu, x);
            const double jd = (sf::bessel_j(nu, x + h) - sf::bessel_j(nu, x - h)) / (2 * h);
            const double yd = (sf::bessel_y(nu, x + h) - sf::bessel_y(nu, x - h)) / (2 * h);
            CHECK(std::abs(p.jp - jd) < 1e-8);
            CHECK(std::abs(p.yp - yd) < 1e-8);
        }
    }
}

namespace {
template <typename F>
double d2_4th(F f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}
template <typename F>
double d1_4th(F f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
}  // namespace

TEST_CASE("I/K satisfy the modified Bessel equation numerically") {
    const double h = 4e-3;
    for (double nu : {0.0, 0.5, 2.0}) {
        for (double x : {1.2, 3.0, 8.0}) {
            auto checkfn = [&](auto f) {
                const double f0 = f(x);
                const double res =
                    x * x * d2_4th(f, x, h) + x * d1_4th(f, x, h) - (x * x + nu * nu) * f0;
                CHECK(std::abs(res) < 1e-7 * (1.0 + std::abs(f0)) * x * x);
            };
            checkfn([&](double t) { return sf::bessel_i(nu, t); });
            checkfn([&](double t) { return sf::bessel_k(nu, t); });
        }
    }
}

TEST_CASE("airy values against the rotated-contour quadrature oracle") {
    CHECK(std::abs(sf::airy_ai(0.0) - 0.3550280538878172) < 1e-9);
    for (double x : {-12.0, -5.0, -2.0, -0.7, 0.0, 0.9, 2.0, 4.5}) {
        const double ref = oracles::airy_ai_quad(x);
        CHECK(std::abs(sf::airy_ai(x) - ref) < 1e-9 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("airy asymptotic decay at x = 10") {
    const double v = sf::airy_ai(10.0);
    CHECK(v > 0.0);
    CHECK(v < 1e-9);
    // leading asymptotic term as an independent magnitude check
    const double zeta = 2.0 / 3.0 * std::pow(10.0, 1.5);
    const double lead = std::exp(-zeta) / (2.0 * std::sqrt(oracles::kPi) * std::pow(10.0, 0.25));
    CHECK(std::abs(v - lead) < 0.05 * lead);
}

TEST_CASE("airy ODE satisfied via numeric second derivative") {
    const double h = 2e-3;
    for (double x : {-2.0, 0.0, 2.0}) {
        auto ai = [](double t) { return sf::airy_ai(t); };
        auto bi = [](double t) { return sf::airy_bi(t); };
        CHECK(std::abs(d2_4th(ai, x, h) - x * sf::airy_ai(x)) < 1e-7);
        CHECK(std::abs(d2_4th(bi, x, h) - x * sf::airy_bi(x)) < 1e-7);
    }
}

TEST_CASE("airy Wronskian identity") {
    for (double x = -5.0; x <= 5.0; x += 0.5) {
        const double w = sf::airy_ai(x) * sf::airy_bi_deriv(x) - sf::airy_ai_deriv(x) * sf::airy_bi(x);
        CHECK(std::abs(w - 1.0 / oracles::kPi) < 1e-8);
    }
}

TEST_CASE("lambert W basics and round trip") {
    CHECK(sf::lambert_w(0.0) == 0.0);
    CHECK(std::abs(sf::lambert_w(std::exp(1.0)) - 1.0) < 1e-12);
    const double w1 = oracles::lambert_newton(1.0);
    CHECK(std::abs(w1 - 0.5671432904097838) < 1e-14);
    CHECK(std::abs(sf::lambert_w(1.0) - 0.5671432904097838) < 1e-12);

    for (double y = 1e-6; y <= 1e6; y *= 10.0) {
        const double w = sf::lambert_w(y);
        CHECK(std::abs(w * std::exp(w) - y) < 1e-12 * y);
    }
    // near the branch point
    const double yb = -std::exp(-1.0) + 1e-6;
    const double wb = sf::lambert_w(yb);
    CHECK(std::abs(wb * std::exp(wb) - yb) < 1e-12);
    CHECK_THROWS_AS(sf::lambert_w(-std::exp(-1.0) - 1e-6), BelowBranchPoint);
}

TEST_CASE("range guards") {
    CHECK_THROWS_AS(sf::bessel_j(0.5, -1.0), OutOfSupportedRange);
    CHECK_THROWS_AS(sf::bessel_j(6.0, 1.0), OutOfSupportedRange);
    CHECK_THROWS_AS(sf::bessel_j(0.5, 60.0), OutOfSupportedRange);
    CHECK_THROWS_AS(sf::airy_ai(16.0), OutOfSupportedRange);
}
