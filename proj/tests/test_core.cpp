#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "axion/core.hpp"

using namespace axion;

TEST_CASE("gradient of a constant vanishes") {
    ScalarMap f = [](const SpacetimePoint&) { return 5.0; };
    const Vec4 g = numeric_gradient(f, {0.7, -0.2, 1.1, 0.4}, {4, 1e-3});
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(g[mu]) < 1e-12);
}

TEST_CASE("gradient of x0^2 at (1,0,0,0)") {
    ScalarMap f = [](const SpacetimePoint& p) { return p.x0 * p.x0; };
    const Vec4 g = numeric_gradient(f, {1, 0, 0, 0}, {4, 1e-3});
    CHECK(std::abs(g[0] - 2.0) < 1e-10);
    CHECK(std::abs(g[1]) < 1e-10);
    CHECK(std::abs(g[2]) < 1e-10);
    CHECK(std::abs(g[3]) < 1e-10);
}

TEST_CASE("gradient of sin(x0 - x1) against the analytic derivative") {
    ScalarMap f = [](const SpacetimePoint& p) { return std::sin(p.x0 - p.x1); };
    const SpacetimePoint pt{0.3, 0.1, 0, 0};
    const Vec4 g = numeric_gradient(f, pt, {4, 1e-2});
    const double c = std::cos(0.2);
    CHECK(std::abs(g[0] - c) < 1e-8);
    CHECK(std::abs(g[1] + c) < 1e-8);
    CHECK(std::abs(g[2]) < 1e-8);
    CHECK(std::abs(g[3]) < 1e-8);
}

TEST_CASE("dalembertian basics") {
    StencilScheme s{4, 1e-3};
    ScalarMap f0 = [](const SpacetimePoint& p) { return p.x0 * p.x0; };
    CHECK(std::abs(dalembertian(f0, {0.3, 0.1, 0, 0}, s) - 2.0) < 1e-8);
    ScalarMap f1 = [](const SpacetimePoint& p) { return p.x1 * p.x1; };
    CHECK(std::abs(dalembertian(f1, {0.3, 0.1, 0, 0}, s) + 2.0) < 1e-8);
    ScalarMap fw = [](const SpacetimePoint& p) { return std::sin(p.x0 - p.x1); };
    CHECK(std::abs(dalembertian(fw, {0.3, 0.1, 0.2, 0.5}, s)) < 1e-8);
}

TEST_CASE("curl and divergence basics") {
    StencilScheme s{4, 1e-3};
    VectorMap shear = [](const SpacetimePoint& p) { return Vec3{p.x2, 0, 0}; };
    auto cd = curl_and_div(shear, {0, 0.4, 0.7, -0.2}, s);
    CHECK(std::abs(cd.curl[0]) < 1e-10);
    CHECK(std::abs(cd.curl[1]) < 1e-10);
    CHECK(std::abs(cd.curl[2] + 1.0) < 1e-10);
    CHECK(std::abs(cd.div) < 1e-10);

    VectorMap radial = [](const SpacetimePoint& p) { return Vec3{p.x1, p.x2, p.x3}; };
    cd = curl_and_div(radial, {0, 0.4, 0.7, -0.2}, s);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(cd.curl[c]) < 1e-10);
    CHECK(std::abs(cd.div - 3.0) < 1e-10);
}

TEST_CASE("curl of a Coulomb-type magnetic field is zero off the origin") {
    // B = -q x / r^3, curl B = 0 and div B = 0 for r > 0.
    VectorMap b = [](const SpacetimePoint& p) {
        const double r = p.r();
        const double s = -1.0 / (r * r * r);
        return Vec3{s * p.x1, s * p.x2, s * p.x3};
    };
    auto cd = curl_and_div(b, {0.5, 1, 1, 1}, {4, 1e-3});
    for (int c = 0; c < 3; ++c) CHECK(std::abs(cd.curl[c]) < 1e-6);
    CHECK(std::abs(cd.div) < 1e-6);
}

TEST_CASE("polynomials up to the stencil order differentiate exactly") {
    ScalarMap quartic = [](const SpacetimePoint& p) {
        return 0.3 * p.x0 * p.x0 * p.x0 * p.x0 - 1.2 * p.x1 * p.x1 * p.x2 +
               0.7 * p.x3 * p.x3 * p.x3 + 2.0 * p.x0 * p.x1;
    };
    const SpacetimePoint pt{0.8, -0.5, 0.6, 0.9};
    const Vec4 g = numeric_gradient(quartic, pt, {4, 1e-2});
    const Vec4 expected{0.3 * 4 * std::pow(pt.x0, 3) + 2.0 * pt.x1,
                        -1.2 * 2 * pt.x1 * pt.x2 + 2.0 * pt.x0, -1.2 * pt.x1 * pt.x1,
                        0.7 * 3 * pt.x3 * pt.x3};
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(g[mu] - expected[mu]) < 1e-10);

    ScalarMap quadratic = [](const SpacetimePoint& p) {
        return 1.5 * p.x0 * p.x0 - 0.4 * p.x1 * p.x2 + p.x3;
    };
    const Vec4 g2 = numeric_gradient(quadratic, pt, {2, 1e-2});
    CHECK(std::abs(g2[0] - 3.0 * pt.x0) < 1e-10);
    CHECK(std::abs(g2[1] + 0.4 * pt.x2) < 1e-10);
}

TEST_CASE("order-2 stencil halving h reduces the error by about 4") {
    ScalarMap f = [](const SpacetimePoint& p) { return std::sin(1.3 * p.x0 + 0.4 * p.x2); };
    const SpacetimePoint pt{0.37, 0.0, 0.81, 0.0};
    const double exact = 1.3 * std::cos(1.3 * pt.x0 + 0.4 * pt.x2);
    const double e1 = std::abs(numeric_gradient(f, pt, {2, 1e-2})[0] - exact);
    const double e2 = std::abs(numeric_gradient(f, pt, {2, 5e-3})[0] - exact);
    const double ratio = e1 / e2;
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}

TEST_CASE("dalembertian consistent with gradient applied twice") {
    ScalarMap f = [](const SpacetimePoint& p) {
        return std::sin(p.x0) * std::cos(0.5 * p.x1) + 0.2 * p.x2 * p.x3;
    };
    const SpacetimePoint pt{0.4, 0.9, -0.3, 0.6};
    const StencilScheme s{4, 2e-3};
    const double direct = dalembertian(f, pt, s);
    double composed = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        ScalarMap dmu = [&f, mu, &s](const SpacetimePoint& q) {
            return numeric_gradient(f, q, s)[mu];
        };
        const double second = numeric_gradient(dmu, pt, s)[mu];
        composed += (mu == 0 ? second : -second);
    }
    CHECK(std::abs(direct - composed) < 10 * residual_tolerance(s));
}

TEST_CASE("stencil leaving the domain raises DomainViolation") {
    ScalarMap f = [](const SpacetimePoint& p) { return p.x1; };
    auto domain = [](const SpacetimePoint& p) { return p.x1 > 0.0; };
    CHECK_THROWS_AS(numeric_gradient(f, {0, 1e-4, 0, 0}, {4, 1e-3}, domain), DomainViolation);
    CHECK_NOTHROW(numeric_gradient(f, {0, 1.0, 0, 0}, {4, 1e-3}, domain));
}

TEST_CASE("deterministic rng streams") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    SplitMix64 c(43);
    CHECK(c.next() != SplitMix64(42).next());
    CHECK(mix_seed(7, "fam") == mix_seed(7, "fam"));
    CHECK(mix_seed(7, "fam") != mix_seed(7, "other"));
}
