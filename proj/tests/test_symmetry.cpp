#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "axion/catalog.hpp"
#include "axion/symmetry.hpp"

using namespace axion;
using sym::BoostParams;
using sym::RotationMatrix;

namespace {

double residual_at(const FieldConfiguration& cfg, const SourceProfile& src,
                   const SpacetimePoint& pt) {
    return residual_for(cfg, pt, src, cfg.metadata.kappa, default_scheme(pt)).norm();
}

}  // namespace

TEST_CASE("rotation matrices validate and compose") {
    auto R1 = RotationMatrix::about_axis({0, 0, 1}, 0.7);
    auto R2 = RotationMatrix::about_axis({1, 2, -1}, -1.2);
    CHECK_NOTHROW(R1.validate());
    CHECK_NOTHROW(R2.validate());
    RotationMatrix bad = R1;
    bad.m[0][0] += 1e-6;
    CHECK_THROWS_AS(bad.validate(), InvalidRotation);

    // R R^T = I within 1e-12 (validated); det +1 (validated)
    auto R21 = R2.times(R1);
    CHECK_NOTHROW(R21.validate());
}

TEST_CASE("Lorentz matrix satisfies the defining metric identity") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        BoostParams lam{{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)}};
        const auto L = sym::lorentz_matrix(lam);
        const double eta[4] = {1, -1, -1, -1};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += L[k][i] * eta[k] * L[k][j];
                CHECK(std::abs(s - (i == j ? eta[i] : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("identity transforms act as the identity") {
    auto cfg = catalog::instantiate("RadialMassive", {});
    auto r = sym::rotate(cfg, RotationMatrix::identity());
    auto b = sym::boost(cfg, BoostParams{});
    auto t = sym::translate(cfg, {0, 0, 0, 0});
    const SpacetimePoint pt{0.4, 1.0, 0.5, -0.3};
    const FieldState f0 = cfg(pt);
    for (const auto& c : {r, b, t}) {
        const FieldState f = c(pt);
        CHECK(f.theta == doctest::Approx(f0.theta).epsilon(1e-15));
        for (int i = 0; i < 3; ++i) {
            CHECK(f.E[i] == doctest::Approx(f0.E[i]).epsilon(1e-15));
            CHECK(f.B[i] == doctest::Approx(f0.B[i]).epsilon(1e-15));
        }
    }
}

TEST_CASE("Coulomb field is rotation-equivariant pointwise") {
    catalog::FamilyParams p;
    p.functions["phi1"] = [](double u) { return 0.3 * std::sin(u); };
    auto cfg = catalog::instantiate("Coulomb", p);
    auto R = RotationMatrix::about_axis({0.3, -1.0, 0.8}, 1.1);
    auto rot = sym::rotate(cfg, R);
    SplitMix64 rng(11);
    for (int i = 0; i < 10; ++i) {
        SpacetimePoint pt{rng.uniform(-1, 1), 0, 0, 0};
        const Vec3 x = {rng.uniform(0.8, 1.6), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
        pt.x1 = x[0];
        pt.x2 = x[1];
        pt.x3 = x[2];
        const FieldState a = rot(pt), b = cfg(pt);
        for (int c = 0; c < 3; ++c) CHECK(a.E[c] == doctest::Approx(b.E[c]).epsilon(1e-12));
        CHECK(a.theta == doctest::Approx(b.theta).epsilon(1e-12));
    }
}

TEST_CASE("rotated cylindric family still solves the system") {
    auto cfg = catalog::instantiate("CylindricCoulombLike", {});
    auto src = catalog::family_source("CylindricCoulombLike", {});
    auto rot = sym::rotate(cfg, RotationMatrix::about_axis({0, 0, 1}, 1.5707963267948966));
    SplitMix64 rng(13);
    int accepted = 0;
    for (int i = 0; i < 40 && accepted < 20; ++i) {
        const SpacetimePoint pt = catalog::sample_point("CylindricCoulombLike", {}, rng);
        // rotate the sample forward so it lands in the rotated domain
        const SpacetimePoint q{pt.x0, -pt.x2, pt.x1, pt.x3};
        if (!rot.admissible(q)) continue;
        ++accepted;
        CHECK(residual_at(rot, src, q) <= 1e-6);
    }
    CHECK(accepted >= 20);
}

TEST_CASE("group law spot-checks") {
    auto cfg = catalog::instantiate("PlaneWaveGeneric", {});
    auto R1 = RotationMatrix::about_axis({0.2, 1.0, -0.4}, 0.8);
    auto R2 = RotationMatrix::about_axis({-1.0, 0.5, 0.3}, -0.6);
    auto lhs = sym::rotate(sym::rotate(cfg, R1), R2);
    auto rhs = sym::rotate(cfg, R2.times(R1));
    SplitMix64 rng(17);
    for (int i = 0; i < 10; ++i) {
        const SpacetimePoint pt{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                rng.uniform(-1, 1)};
        const FieldState a = lhs(pt), b = rhs(pt);
        for (int c = 0; c < 3; ++c) {
            CHECK(std::abs(a.E[c] - b.E[c]) < 1e-10);
            CHECK(std::abs(a.B[c] - b.B[c]) < 1e-10);
        }
    }

    // collinear boosts invert
    BoostParams lam{{0.4, 0, 0.3}};
    BoostParams neg{{-0.4, 0, -0.3}};
    auto round = sym::boost(sym::boost(cfg, lam), neg);
    for (int i = 0; i < 10; ++i) {
        const SpacetimePoint pt{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                rng.uniform(-1, 1)};
        const FieldState a = round(pt), b = cfg(pt);
        for (int c = 0; c < 3; ++c) {
            CHECK(std::abs(a.E[c] - b.E[c]) < 1e-8);
            CHECK(std::abs(a.B[c] - b.B[c]) < 1e-8);
        }
        CHECK(std::abs(a.theta - b.theta) < 1e-8);
    }
}

TEST_CASE("boosted plane wave still solves the system and the covector mixes correctly") {
    auto cfg = catalog::instantiate("PlaneWaveGeneric", {});
    auto src = catalog::family_source("PlaneWaveGeneric", {});
    BoostParams lam{{0.3, 0.0, 0.0}};
    auto boosted = sym::boost(cfg, lam);
    SplitMix64 rng(19);
    for (int i = 0; i < 20; ++i) {
        const SpacetimePoint pt{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                rng.uniform(-1, 1)};
        CHECK(residual_at(boosted, src, pt) <= 1e-6);
    }

    // The pulled-back plane-wave phase stays linear; its covector follows the
    // hyperbolic mixing rule: for a boost along x1 acting on the phase
    // eps x0 - k x3, the new covector is (eps cosh, -eps sinh, 0, -k).
    const double eps = 1.0, k = 0.3;  // family defaults: omega = eps x0 - k x3
    const double lnorm = lam.norm();
    const Vec4 n_expected{eps * std::cosh(lnorm), -eps * std::sinh(lnorm), 0.0, -k};
    ScalarMap phase = [&boosted](const SpacetimePoint& q) {
        // E3 = c3 theta - b3 (eps^2 - k^2) is monotone in theta, and theta is
        // a trig profile of the phase; sample theta directly instead
        return boosted(q).theta;
    };
    // theta = tk1 cos(mu w) + tk2 sin(mu w) + const: measure d theta / d x_mu
    // at a point and compare directions
    const SpacetimePoint pt{0.2, -0.4, 0.7, 0.1};
    const Vec4 g = numeric_gradient(phase, pt, {4, 1e-4});
    // gradient parallel to n_expected
    double cross_norm = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            cross_norm = std::max(cross_norm,
                                  std::abs(g[a] * n_expected[b] - g[b] * n_expected[a]));
    CHECK(cross_norm < 1e-6);
}

TEST_CASE("translations preserve solutions") {
    auto cfg = catalog::instantiate("Coulomb", {});
    auto src = catalog::family_source("Coulomb", {});
    auto still = sym::translate(cfg, {5, 0, 0, 0});
    // static family: time translation acts as the identity
    const SpacetimePoint pt{0.1, 1.0, 0.8, -0.4};
    const FieldState a = still(pt), b = cfg(pt);
    for (int c = 0; c < 3; ++c) CHECK(a.E[c] == doctest::Approx(b.E[c]).epsilon(1e-13));

    auto rad = catalog::instantiate("RadialMassive", {});
    auto rsrc = catalog::family_source("RadialMassive", {});
    auto moved = sym::translate(rad, {0, 1, 0, 0});
    SplitMix64 rng(23);
    for (int i = 0; i < 20; ++i) {
        SpacetimePoint pt = catalog::sample_point("RadialMassive", {}, rng);
        pt.x1 += 1.0;  // forward-shifted sample stays admissible
        CHECK(residual_at(moved, rsrc, pt) <= 1e-6);
    }
}

TEST_CASE("five random group elements keep ten families on shell") {
    const std::vector<std::string> ids = {
        "PlaneWaveLightlike", "PlaneWaveGeneric", "TwoScaleSuperposable", "Coulomb",
        "RadialMassive",      "CylindricCoulombLike", "AlgebraicA11",     "LinearA5",
        "NonlinearA9-particular", "SixFunction"};
    SplitMix64 rng(20240817u);
    for (int e = 0; e < 5; ++e) {
        sym::GroupElement g;
        g.R = RotationMatrix::about_axis(
            {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(-2.5, 2.5));
        g.lam.lambda = {rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
        g.shift = {rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4),
                   rng.uniform(-0.4, 0.4)};
        const auto Lfwd = sym::lorentz_matrix(BoostParams{{-g.lam.lambda[0], -g.lam.lambda[1],
                                                           -g.lam.lambda[2]}});
        for (const auto& id : ids) {
            CAPTURE(id);
            auto cfg = catalog::instantiate(id, {});
            auto src = catalog::family_source(id, {});
            auto moved = sym::apply(cfg, g);
            SplitMix64 prng(mix_seed(7u * e + 1, id));
            int accepted = 0;
            for (int i = 0; i < 60 && accepted < 10; ++i) {
                // push base samples forward through the element
                SpacetimePoint base = catalog::sample_point(id, {}, prng);
                const Vec3 rx = g.R.apply(base.spatial());
                SpacetimePoint q{base.x0, rx[0], rx[1], rx[2]};
                double y[4];
                for (int r = 0; r < 4; ++r) {
                    y[r] = 0.0;
                    for (int c = 0; c < 4; ++c) y[r] += Lfwd[r][c] * q[c];
                }
                SpacetimePoint fwd{y[0] + g.shift[0], y[1] + g.shift[1], y[2] + g.shift[2],
                                   y[3] + g.shift[3]};
                if (!moved.admissible(fwd)) continue;
                bool stencil_ok = true;
                for (int mu = 0; mu < 4 && stencil_ok; ++mu)
                    for (int kk = -2; kk <= 2 && stencil_ok; ++kk)
                        stencil_ok = moved.admissible(shifted(fwd, mu, kk * 2e-3 * std::max(1.0, fwd.max_abs())));
                if (!stencil_ok) continue;
                ++accepted;
                const StencilScheme s = default_scheme(fwd);
                const double r = residual_for(moved, fwd, src, moved.metadata.kappa, s).norm();
                CHECK(r <= 10.0 * residual_tolerance(s));
            }
            CHECK(accepted >= 5);
        }
    }
}

TEST_CASE("boost guard rejects excessive rapidity") {
    auto cfg = catalog::instantiate("Coulomb", {});
    CHECK_THROWS_AS(sym::boost(cfg, BoostParams{{25, 0, 0}}), RangeError);
}

TEST_CASE("generator defects: exact flows sit at the floor") {
    auto cfg = catalog::instantiate("Coulomb", {});
    auto src = catalog::family_source("Coulomb", {});
    SplitMix64 rng(31);
    std::vector<SpacetimePoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(catalog::sample_point("Coulomb", {}, rng));

    // P0 on a family with wave content: translation flow is exact
    auto rep = sym::generator_defect(sym::generator("P1"), cfg, src, 0.02, pts);
    CHECK(rep.order_estimate >= 1.9);
    auto rep0 = sym::generator_defect(sym::generator("P0"), cfg, src, 0.02, pts);
    CHECK(rep0.defect_eps <= 1e-8);
}

TEST_CASE("generator defects: genuine O(eps^2) scaling for boosts") {
    auto cfg = catalog::instantiate("RadialMassive", {});
    auto src = catalog::family_source("RadialMassive", {});
    SplitMix64 rng(37);
    std::vector<SpacetimePoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(catalog::sample_point("RadialMassive", {}, rng));
    auto rep = sym::generator_defect(sym::generator("J03"), cfg, src, 0.02, pts);
    CHECK(!rep.at_floor);
    CHECK(rep.order_estimate >= 1.9);
    CHECK(rep.order_estimate <= 2.2);
}

TEST_CASE("dilatation is a symmetry only for the free source") {
    // positive control: massless lightlike wave
    catalog::FamilyParams free_wave;
    auto cfg = catalog::instantiate("PlaneWaveLightlike", free_wave);
    auto src = catalog::family_source("PlaneWaveLightlike", free_wave);
    SplitMix64 rng(41);
    std::vector<SpacetimePoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(catalog::sample_point("PlaneWaveLightlike", {}, rng));
    auto good = sym::generator_defect(sym::generator("D"), cfg, src, 0.02, pts);
    CHECK(good.order_estimate >= 1.9);

    // negative control: massive radial family
    auto rad = catalog::instantiate("RadialMassive", {});
    auto rsrc = catalog::family_source("RadialMassive", {});
    std::vector<SpacetimePoint> rpts;
    for (int i = 0; i < 8; ++i) rpts.push_back(catalog::sample_point("RadialMassive", {}, rng));
    auto bad = sym::generator_defect(sym::generator("D"), rad, rsrc, 0.02, rpts);
    CHECK(bad.order_estimate <= 1.1);
}

TEST_CASE("theta shift respects the source classification") {
    // constant source: P4 exact
    auto cv = catalog::instantiate("ConstantSourceVacuum", {});
    auto cvs = catalog::family_source("ConstantSourceVacuum", {});
    SplitMix64 rng(43);
    std::vector<SpacetimePoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(catalog::sample_point("ConstantSourceVacuum", {}, rng));
    auto ok = sym::generator_defect(sym::generator("P4"), cv, cvs, 0.02, pts);
    CHECK(ok.order_estimate >= 1.9);

    // exponential source: P4 fails at first order, X(a) succeeds
    auto ev = catalog::instantiate("ExponentialVacuum", {});
    auto evs = catalog::family_source("ExponentialVacuum", {});
    std::vector<SpacetimePoint> epts;
    for (int i = 0; i < 8; ++i) epts.push_back(catalog::sample_point("ExponentialVacuum", {}, rng));
    auto bad = sym::generator_defect(sym::generator("P4"), ev, evs, 0.02, epts);
    CHECK(bad.order_estimate <= 1.1);
    auto xgen = sym::make_x_generator(2.0);  // matches the family's exponent
    auto good = sym::generator_defect(xgen, ev, evs, 0.02, epts);
    CHECK(good.order_estimate >= 1.9);
}

TEST_CASE("generator defect refuses a non-solution") {
    auto cfg = catalog::instantiate("Coulomb", {});
    auto src = catalog::family_source("Coulomb", {});
    FieldConfiguration broken = cfg;
    auto base = cfg.evaluator;
    broken.evaluator = [base](const SpacetimePoint& pt) {
        FieldState f = base(pt);
        f.E[0] += 0.3 * pt.x1 * pt.x1;
        return f;
    };
    SplitMix64 rng(47);
    std::vector<SpacetimePoint> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(catalog::sample_point("Coulomb", {}, rng));
    CHECK_THROWS_AS(sym::generator_defect(sym::generator("P1"), broken, src, 0.02, pts),
                    NotASolution);
}

TEST_CASE("subalgebra table contents") {
    const auto table = sym::subalgebra_table();
    CHECK(table.size() == 30);

    const auto& a1 = sym::subalgebra("A1");
    CHECK(a1.basis_text[0] == "P0");
    CHECK(a1.basis_text[1] == "P1");
    CHECK(a1.basis_text[2] == "P2");
    CHECK(a1.rank_xi == 3);

    const auto& a30 = sym::subalgebra("A30");
    CHECK(a30.basis_text[0] == "J12");
    CHECK_FALSE(a30.satisfies_la);
    CHECK(a30.transversality == "weak-only");

    // the lightlike combination drops rank at alpha = 0
    const auto zero_alpha = sym::subalgebra_table(0.0, 1.0);
    for (const auto& s : zero_alpha)
        if (s.id == "A6") {
            CHECK_FALSE(s.satisfies_la);
            CHECK(s.rank_xi == 2);
        }
}

TEST_CASE("stored ranks match the numeric rank at generic points") {
    const SpacetimePoint generic[3] = {{0.731, 0.421, -0.558, 0.924},
                                       {1.213, -0.337, 0.771, -0.512},
                                       {-0.654, 0.918, 0.284, 1.337}};
    for (const auto& s : sym::subalgebra_table()) {
        CAPTURE(s.id);
        int best = 0;
        for (const auto& pt : generic) best = std::max(best, sym::numeric_rank_xi(s, pt));
        CHECK(best == s.rank_xi);
    }
}

TEST_CASE("null-rotation combinations expand correctly") {
    // G1 = J01 - J13: coordinate part (x1, x0 + x3, 0, -x1)
    const auto& a12 = sym::subalgebra("A12");
    const SpacetimePoint pt{0.7, -0.4, 1.2, 0.5};
    Vec4 xi{0, 0, 0, 0};
    for (const auto& [gid, c] : a12.basis[0]) {
        const Vec4 v = sym::generator(gid).xi(pt);
        for (int mu = 0; mu < 4; ++mu) xi[mu] += c * v[mu];
    }
    CHECK(xi[0] == doctest::Approx(pt.x1));
    CHECK(xi[1] == doctest::Approx(pt.x0 + pt.x3));
    CHECK(xi[2] == doctest::Approx(0.0));
    CHECK(xi[3] == doctest::Approx(-pt.x1));
}

TEST_CASE("subalgebra JSON export lists all thirty entries") {
    const std::string js = sym::subalgebra_table_json();
    for (int i = 1; i <= 30; ++i)
        CHECK(js.find("\"A" + std::to_string(i) + "\"") != std::string::npos);
}
