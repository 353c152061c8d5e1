// Families reduced to linear ODEs in one invariant variable: the algebras
// whose theta solves the reduced oscillator, plus the elementary branches of
// the Euler/Bessel-type reductions.

#include <cmath>

#include "axion/special_functions.hpp"
#include "catalog_detail.hpp"

namespace axion::catalog::detail {

namespace {

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sinh;
using std::sqrt;

FamilyDescriptor linear_a5() {
    FamilyDescriptor d;
    d.id = "LinearA5";
    d.anchor = "Let us start with algebra $A_5$";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"c1", ParamSpec::Kind::Real, "c1*c2 == 0"},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"tk1", ParamSpec::Kind::Real, ""},
                      {"tk2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"c1", 0.4}, {"c2", 0.0}, {"c3", 0.8}, {"c4", 0.3},
                        {"m", 0.5},  {"tk1", 0.5}, {"tk2", 0.3}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        return std::vector<ConstraintCheck>{
            equality("c1*c2 == 0", p.real("c1") * p.real("c2"), 0.0)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), c4 = p.real("c4");
        const double m = p.real("m");
        LinearTheta theta{c3 * c3 - m * m, c3 * c4, p.real("tk1"), p.real("tk2")};
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double th = theta.value(pt.x2);
            const double lift = pt.x0 + pt.x3;
            FieldState f;
            f.theta = th;
            const double b1 = lift * (c1 * th + c2);
            const double b2 = c1 * lift;
            f.B = {b1, b2, -c3 * th + c4};
            f.E = {-b2, b1, c3};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.3, 1.3); };
    return d;
}

FamilyDescriptor linear_a7() {
    FamilyDescriptor d;
    d.id = "LinearA7";
    d.anchor = "Algebra $A_7: \\quad \\langle";
    d.source_kind = "linear-mass";
    d.singular_loci = "x0 + x3 = 0";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, ""},
                      {"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"tk1", ParamSpec::Kind::Real, ""},
                      {"tk2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 0.6}, {"c1", 0.4},  {"c2", 0.3},  {"c3", 0.7},
                        {"c4", 0.2},    {"m", 0.4},   {"tk1", 0.5}, {"tk2", 0.3}};
    d.kappa = 1.0;
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha");
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), c4 = p.real("c4");
        const double m = p.real("m");
        LinearTheta theta{c3 * c3 - m * m, c3 * c4, p.real("tk1"), p.real("tk2")};
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) { return pt.x0 + pt.x3 >= 0.4; };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double lift = pt.x0 + pt.x3;
            const double w = pt.x2 - alpha * log(lift);
            const double th = theta.value(w);
            FieldState f;
            f.theta = th;
            const double b1 = (-c1 * th + c2) / lift;
            const double b2 = (-alpha * c3 * th + alpha * c4 - c1) / lift;
            f.B = {b1, b2, -c3 * th + c4};
            f.E = {-b2, b1, c3};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        return SpacetimePoint{rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0),
                              rng.uniform(-1.0, 1.0), rng.uniform(0.2, 1.2)};
    };
    return d;
}

FamilyDescriptor linear_a15() {
    FamilyDescriptor d;
    d.id = "LinearA15";
    d.anchor = "Algebra $ A_{15}: \\quad \\langle G_1-P_0, P_0-P_3, P_2 \\rangle$";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"tk1", ParamSpec::Kind::Real, ""},
                      {"tk2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"c1", 0.5}, {"c2", 0.0},  {"c3", 0.0},
                        {"m", 0.3},  {"tk1", 0.2}, {"tk2", 0.3}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        // the c2/c3 sectors of the printed ansatz leave uncancelled
        // Ampere and axion terms; only this slice closes all equations
        return std::vector<ConstraintCheck>{
            equality("c2 == 0 and c3 == 0 (verified slice)",
                     std::abs(p.real("c2")) + std::abs(p.real("c3")), 0.0)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3");
        const double m = p.real("m");
        // a = -(m^2 + c2^2) <= 0: exponential/polynomial branches only
        LinearTheta theta{-(m * m + c2 * c2), c1 * c2, p.real("tk1"), p.real("tk2")};
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double lift = pt.x0 + pt.x3;
            const double w = pt.x1 + 0.5 * lift * lift;
            const double th = theta.value(w);
            FieldState f;
            f.theta = th;
            const double b1 = -c2 * lift * th - c1 * lift;
            const double b2 = c3 * (2.0 * w - pt.x1) + c2 * lift;
            f.B = {b1, b2, c2 * th + c1};
            f.E = {-b2, b1, c3 * lift + c2};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 0.8, 1.2); };
    return d;
}

FamilyDescriptor linear_a16() {
    FamilyDescriptor d;
    d.id = "LinearA16";
    d.anchor = "Algebra $ A_{16}: \\quad \\langle G_1+P_0, P_1+\\alpha P_2, P_0-P_3";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, ""},
                      {"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, ""},
                      {"c5", ParamSpec::Kind::Real, ""},
                      {"c7", ParamSpec::Kind::Real, "polynomial branch only"},
                      {"c8", ParamSpec::Kind::Real, "polynomial branch only"},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"tk1", ParamSpec::Kind::Real, ""},
                      {"tk2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 0.5}, {"c1", 0.0}, {"c2", 0.2},  {"c3", 0.7},
                        {"c4", 0.3},    {"c5", 0.2}, {"c7", 0.0},  {"c8", 0.0},
                        {"m", 0.4},     {"tk1", 0.25}, {"tk2", 0.15}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        // Gauss picks up an uncancelled c1 * w * theta' term otherwise
        return std::vector<ConstraintCheck>{equality("c1 == 0 (verified slice)",
                                                     p.real("c1"), 0.0)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha");
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3");
        const double c4 = p.real("c4"), c5 = p.real("c5");
        const double c7 = p.real("c7"), c8 = p.real("c8");
        const double m = p.real("m");
        const double a2p1 = alpha * alpha + 1.0;
        const bool degenerate = std::abs(c3 * c3 - m * m) < 1e-12;
        LinearTheta phi{(c3 * c3 - m * m) / a2p1, (c3 * c4 + c1 * c5) / a2p1, p.real("tk1"),
                        p.real("tk2")};
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double lift = pt.x0 + pt.x3;
            const double w = pt.x2 - alpha * pt.x1 - 0.5 * alpha * lift * lift;
            double th;
            if (degenerate) {
                th = (c1 * c1 / 6.0 * w * w * w + 0.5 * (c3 * c4 + c1 * c5) * w * w) / a2p1 +
                     c7 * w + c8;
            } else {
                th = phi.value(w) + c1 * c1 * w / (c3 * c3 - m * m);
            }
            FieldState f;
            f.theta = th;
            const double b1 = lift * (c3 * th - c4) + 0.5 * c1 * lift * lift +
                              c5 / a2p1 * (th - alpha) + c2;
            const double b2 = c1 * (w - 0.5 * alpha * lift * lift) + c3 * lift +
                              c5 / a2p1 * (alpha * th + 1.0) + alpha * c2;
            f.B = {b1, b2, -c3 * th - c1 * lift + c4};
            f.E = {-b2 - alpha * c1, b1 + c1, -alpha * c1 * lift + c3};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 0.9, 1.1); };
    return d;
}

FamilyDescriptor linear_a25() {
    FamilyDescriptor d;
    d.id = "LinearA25";
    d.anchor = "Algebra $ A_{25}: \\quad \\langle J_{03}+\\alpha";
    d.source_kind = "linear-mass";
    d.singular_loci = "x0 + x3 = 0";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, ""},
                      {"beta", ParamSpec::Kind::Real, ""},
                      {"branch", ParamSpec::Kind::Real,
                       "0: lightlike-log theta wave (c1 = 0); 1: null field pair (m = 0)"},
                      {"c1", ParamSpec::Kind::Real, ""},
                      {"theta0", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"tk1", ParamSpec::Kind::Real, ""},
                      {"tk2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 0.4}, {"beta", 0.6}, {"branch", 0.0}, {"c1", 0.0},
                        {"theta0", 0.2}, {"m", 0.5},    {"tk1", 0.3}, {"tk2", 0.2}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        // the printed c2/c3 sectors violate div B (the zeta-linear term);
        // the surviving branches carry either a theta profile or a c1 field
        std::vector<ConstraintCheck> out;
        if (static_cast<int>(p.real("branch")) == 1)
            out.push_back(equality("branch 1 needs m == 0 (constant theta)", p.real("m"), 0.0));
        else
            out.push_back(equality("branch 0 needs c1 == 0", p.real("c1"), 0.0));
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double beta = p.real("beta");
        const int branch = static_cast<int>(p.real("branch"));
        const double c1 = p.real("c1"), m = p.real("m"), theta0 = p.real("theta0");
        LinearTheta theta{-m * m, 0.0, p.real("tk1"), p.real("tk2")};
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) { return pt.x0 + pt.x3 >= 0.4; };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double lift = pt.x0 + pt.x3;
            FieldState f;
            if (branch == 0) {
                f.theta = theta.value(pt.x2 - beta * log(lift));
            } else {
                f.theta = theta0;
                f.B = {0.0, c1 / lift, 0.0};
                f.E = {-c1 / lift, 0.0, 0.0};
            }
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        return SpacetimePoint{rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0),
                              rng.uniform(-1.0, 1.0), rng.uniform(0.2, 1.2)};
    };
    return d;
}

// Fields of the boost-invariant reduction: theta is a profile of
// w = sqrt(x0^2 - x3^2).
FieldConfiguration a4_fields(double c1, double c2, double c3, double c4, double c5, double c6,
                             const std::function<double(double)>& theta) {
    FieldConfiguration cfg;
    cfg.domain = [](const SpacetimePoint& pt) {
        return pt.x0 * pt.x0 - pt.x3 * pt.x3 >= 0.45;
    };
    cfg.evaluator = [=](const SpacetimePoint& pt) {
        const double w2 = pt.x0 * pt.x0 - pt.x3 * pt.x3;
        const double w = sqrt(w2);
        const double th = theta(w);
        FieldState f;
        f.theta = th;
        f.B = {(-c2 * pt.x3 * th + c6 * pt.x3 - c1 * pt.x0) / w2,
               (-c1 * pt.x3 * th + c5 * pt.x3 + c2 * pt.x0) / w2, c3};
        f.E = {(-c1 * pt.x0 * th + c5 * pt.x0 + c2 * pt.x3) / w2,
               (c2 * pt.x0 * th + c1 * pt.x3 - c6 * pt.x0) / w2, c3 * th + c4};
        return f;
    };
    return cfg;
}

SpacetimePoint a4_sample(SplitMix64& rng) {
    return SpacetimePoint{rng.uniform(1.0, 2.4), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                          rng.uniform(-0.6, 0.6)};
}

FamilyDescriptor linear_a4_elementary() {
    FamilyDescriptor d;
    d.id = "LinearA4-elementary";
    d.anchor = "The general real solution of equation";
    d.source_kind = "linear-mass";
    d.singular_loci = "x0^2 = x3^2";
    d.param_schema = {{"branch", ParamSpec::Kind::Real,
                       "0: c1=c2=0 (Bessel J0/Y0); 1: c3=m=0 (log-trig); 2: both (log)"},
                      {"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, ""},
                      {"c5", ParamSpec::Kind::Real, ""},
                      {"c6", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"k1", ParamSpec::Kind::Real, ""},
                      {"k2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"branch", 0.0}, {"c1", 0.0}, {"c2", 0.0}, {"c3", 0.8},
                        {"c4", 0.4},     {"c5", 0.3}, {"c6", 0.2}, {"m", 0.6},
                        {"k1", 0.8},     {"k2", 0.3}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        const int branch = static_cast<int>(p.real("branch"));
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), m = p.real("m");
        if (branch == 0) {
            out.push_back(equality("branch 0 needs c1 = c2 = 0 (nu = delta = 0)",
                                   c1 * c1 + c2 * c2, 0.0));
            out.push_back(strict_greater("branch 0 needs c3^2 + m^2 > 0", c3 * c3 + m * m, 0.0));
        } else if (branch == 1) {
            out.push_back(equality("branch 1 needs c3 = m = 0 (mu = 0)", c3 * c3 + m * m, 0.0));
            out.push_back(strict_greater("branch 1 needs c1^2 + c2^2 > 0", c1 * c1 + c2 * c2, 0.0));
        } else {
            out.push_back(equality("branch 2 needs c1 = c2 = c3 = m = 0",
                                   c1 * c1 + c2 * c2 + c3 * c3 + m * m, 0.0));
        }
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const int branch = static_cast<int>(p.real("branch"));
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), c4 = p.real("c4");
        const double c5 = p.real("c5"), c6 = p.real("c6"), m = p.real("m");
        const double k1 = p.real("k1"), k2 = p.real("k2");
        std::function<double(double)> theta;
        if (branch == 0) {
            // timelike radial variable flips the forcing sign relative to the
            // cylindrical case: the constant particular solution is -c3*c4/mu^2
            const double mu = sqrt(c3 * c3 + m * m);
            const double alf = -c3 * c4;
            theta = [=](double w) {
                return k1 * sf::bessel_j(0.0, mu * w) + k2 * sf::bessel_y(0.0, mu * w) +
                       alf / (mu * mu);
            };
        } else if (branch == 1) {
            const double nu = sqrt(c1 * c1 + c2 * c2);
            const double delta = c1 * c5 + c2 * c6;
            theta = [=](double w) {
                return k1 * sin(nu * log(w)) + k2 * cos(nu * log(w)) + delta / (nu * nu);
            };
        } else {
            theta = [=](double w) { return k1 * log(w) + k2; };
        }
        return a4_fields(c1, c2, c3, c4, c5, c6, theta);
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return a4_sample(rng); };
    return d;
}

FamilyDescriptor linear_a8_elementary() {
    FamilyDescriptor d;
    d.id = "LinearA8-elementary";
    d.anchor = "are the modified Bessel";
    d.source_kind = "linear-mass";
    d.singular_loci = "cylinder axis x1 = x2 = 0";
    d.param_schema = {
        {"branch", ParamSpec::Kind::Real,
         "0: modified-Bessel (m^2 > c3^2, c1 = c2 = 0); 1: power law (c3^2 = m^2, c2^2 > c1^2)"},
        {"c1", ParamSpec::Kind::Real, ""},
        {"c2", ParamSpec::Kind::Real, ""},
        {"c3", ParamSpec::Kind::Real, ""},
        {"c4", ParamSpec::Kind::Real, ""},
        {"c5", ParamSpec::Kind::Real, ""},
        {"c6", ParamSpec::Kind::Real, ""},
        {"m", ParamSpec::Kind::Real, ""},
        {"k1", ParamSpec::Kind::Real, ""},
        {"k2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"branch", 0.0}, {"c1", 0.0}, {"c2", 0.0}, {"c3", 0.4},
                        {"c4", 0.5},     {"c5", 0.3}, {"c6", 0.2}, {"m", 0.9},
                        {"k1", 0.3},     {"k2", 0.4}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        const int branch = static_cast<int>(p.real("branch"));
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), m = p.real("m");
        if (branch == 0) {
            out.push_back(strict_greater("m^2 - c3^2 > 0", m * m - c3 * c3, 0.0));
            out.push_back(equality("branch 0 needs c1 = c2 = 0", c1 * c1 + c2 * c2, 0.0));
        } else {
            out.push_back(equality("c3^2 == m^2", c3 * c3, m * m));
            out.push_back(strict_greater("c2^2 - c1^2 > 0", c2 * c2 - c1 * c1, 0.0));
            const double lam = sqrt(std::max(0.0, c2 * c2 - c1 * c1));
            out.push_back(
                strict_greater("lambda != 2 (resonant power)", std::abs(lam - 2.0), 1e-9));
        }
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const int branch = static_cast<int>(p.real("branch"));
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), c4 = p.real("c4");
        const double c5 = p.real("c5"), c6 = p.real("c6"), m = p.real("m");
        const double k1 = p.real("k1"), k2 = p.real("k2");
        const double delta = c1 * c5 + c2 * c6;
        const double alf = c3 * c4;
        std::function<double(double)> theta;
        if (branch == 0) {
            const double kap = sqrt(m * m - c3 * c3);
            theta = [=](double w) {
                return k1 * sf::bessel_i(0.0, kap * w) + k2 * sf::bessel_k(0.0, kap * w) -
                       alf / (kap * kap);
            };
        } else {
            const double lam = sqrt(c2 * c2 - c1 * c1);
            theta = [=](double w) {
                return k1 * pow(w, lam) + k2 * pow(w, -lam) - delta / (lam * lam) +
                       alf * w * w / (4.0 - lam * lam);
            };
        }
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) { return std::hypot(pt.x1, pt.x2) >= 0.6; };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double w2 = pt.x1 * pt.x1 + pt.x2 * pt.x2;
            const double th = theta(sqrt(w2));
            FieldState f;
            f.theta = th;
            f.B = {(c2 * pt.x2 * th + c1 * pt.x1 - c6 * pt.x2) / w2,
                   (-c2 * pt.x1 * th + c1 * pt.x2 + c6 * pt.x1) / w2, -c3 * th + c4};
            f.E = {(c1 * pt.x1 * th + c5 * pt.x1 - c2 * pt.x2) / w2,
                   (c1 * pt.x2 * th + c5 * pt.x2 + c2 * pt.x1) / w2, c3};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        const double rho = rng.uniform(0.8, 2.4);
        const double phi = rng.uniform(0.0, 6.283185307179586);
        return SpacetimePoint{rng.uniform(-1.0, 1.0), rho * cos(phi), rho * sin(phi),
                              rng.uniform(-1.0, 1.0)};
    };
    return d;
}

FamilyDescriptor linear_a19() {
    FamilyDescriptor d;
    d.id = "LinearA19";
    d.anchor = "Algebra $ A_{19}: \\quad \\langle J_{12}, J_{03}, P_0-P_3 \\rangle$";
    d.source_kind = "linear-mass";
    d.singular_loci = "x0 + x3 = 0 and the cylinder axis";
    d.param_schema = {{"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"k1", ParamSpec::Kind::Real, ""},
                      {"k2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"c1", 0.5}, {"c2", 0.3}, {"c3", 1.0},
                        {"m", 0.6},  {"k1", 0.8}, {"k2", 0.3}};
    d.kappa = 1.0;
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3"), m = p.real("m");
        const double k1 = p.real("k1"), k2 = p.real("k2");
        const double mu2 = c3 * c3 - m * m;
        const double alf = c2 * c3;
        std::function<double(double)> theta;
        if (mu2 > 1e-12) {
            const double mu = sqrt(mu2);
            theta = [=](double w) {
                return k1 * sf::bessel_j(0.0, mu * w) + k2 * sf::bessel_y(0.0, mu * w) + alf / mu2;
            };
        } else if (mu2 < -1e-12) {
            const double kap = sqrt(-mu2);
            theta = [=](double w) {
                return k1 * sf::bessel_i(0.0, kap * w) + k2 * sf::bessel_k(0.0, kap * w) +
                       alf / mu2;
            };
        } else {
            theta = [=](double w) { return 0.25 * alf * w * w + k1 * log(w) + k2; };
        }
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) {
            return pt.x0 + pt.x3 >= 0.4 && std::hypot(pt.x1, pt.x2) >= 0.6;
        };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double rho2 = pt.x1 * pt.x1 + pt.x2 * pt.x2;
            const double lift = pt.x0 + pt.x3;
            const double th = theta(sqrt(rho2));
            FieldState f;
            f.theta = th;
            const double b1 = c1 * (pt.x1 + pt.x2 * th) / (lift * rho2);
            const double b2 = c1 * (pt.x2 - pt.x1 * th) / (lift * rho2);
            f.B = {b1, b2, -c3 * th + c2};
            f.E = {-b2, b1, c3};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        const double rho = rng.uniform(0.8, 2.2);
        const double phi = rng.uniform(0.0, 6.283185307179586);
        return SpacetimePoint{rng.uniform(0.5, 1.5), rho * cos(phi), rho * sin(phi),
                              rng.uniform(0.2, 1.0)};
    };
    return d;
}

FamilyDescriptor linear_a24_elementary() {
    FamilyDescriptor d;
    d.id = "LinearA24-elementary";
    d.anchor = "then this system can be integrated in elementary or";
    d.source_kind = "linear-mass";
    d.singular_loci = "x0^2 = x1^2 + x3^2";
    d.param_schema = {{"branch", ParamSpec::Kind::Real,
                       "0: c1 = c2 = 0, m != 0 (spherical wave); 1: c1 = m = 0, c2 != 0"},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"k1", ParamSpec::Kind::Real, ""},
                      {"k2", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"branch", 0.0}, {"c2", 0.0}, {"c3", 0.5},
                        {"m", 1.0},      {"k1", 0.6}, {"k2", 0.3}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        const int branch = static_cast<int>(p.real("branch"));
        if (branch == 0) {
            out.push_back(equality("branch 0 needs c2 = 0", p.real("c2"), 0.0));
            out.push_back(strict_greater("branch 0 needs m != 0", std::abs(p.real("m")), 0.0));
        } else {
            out.push_back(equality("branch 1 needs m = 0", p.real("m"), 0.0));
            out.push_back(strict_greater("branch 1 needs c2 != 0", std::abs(p.real("c2")), 0.0));
        }
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const int branch = static_cast<int>(p.real("branch"));
        const double c2 = p.real("c2"), c3 = p.real("c3"), m = p.real("m");
        const double k1 = p.real("k1"), k2 = p.real("k2");
        std::function<double(double)> theta, phi;
        if (branch == 0) {
            theta = [=](double w) { return (k1 * sin(m * w) + k2 * cos(m * w)) / w; };
            phi = [=](double w) { return -c3 / (w * w * w); };
        } else {
            // in u = 1/w the reduced equation is theta_uu + c2^2 theta = -c2 c3
            theta = [=](double w) { return k1 * sin(c2 / w) + k2 * cos(c2 / w) - c3 / c2; };
            phi = [=](double w) {
                const double th = k1 * sin(c2 / w) + k2 * cos(c2 / w) - c3 / c2;
                return -(c2 * th + c3) / (w * w * w);
            };
        }
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) {
            return pt.x0 * pt.x0 - pt.x1 * pt.x1 - pt.x3 * pt.x3 >= 0.45;
        };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double w2 = pt.x0 * pt.x0 - pt.x1 * pt.x1 - pt.x3 * pt.x3;
            const double w = sqrt(w2);
            const double ph = phi(w);
            FieldState f;
            f.theta = theta(w);
            f.B = {-pt.x3 * ph, -c2 * pt.x0 / (w2 * w), pt.x1 * ph};
            f.E = {-c2 * pt.x3 / (w2 * w), pt.x0 * ph, c2 * pt.x1 / (w2 * w)};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        return SpacetimePoint{rng.uniform(1.2, 2.4), rng.uniform(-0.5, 0.5),
                              rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5)};
    };
    return d;
}

}  // namespace

void register_linear_ode(std::vector<FamilyDescriptor>& out) {
    out.push_back(linear_a5());
    out.push_back(linear_a7());
    out.push_back(linear_a15());
    out.push_back(linear_a16());
    out.push_back(linear_a25());
    out.push_back(linear_a4_elementary());
    out.push_back(linear_a8_elementary());
    out.push_back(linear_a19());
    out.push_back(linear_a24_elementary());
}

}  // namespace axion::catalog::detail
