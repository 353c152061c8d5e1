// Nonlinear reductions (hyperbolic-profile algebra and its partners), the
// weak-transversality families, the separated lightlike family, and the
// six-arbitrary-function class.

#include <cmath>
#include <memory>

#include "axion/ode.hpp"
#include "axion/special_functions.hpp"
#include "catalog_detail.hpp"

namespace axion::catalog::detail {

namespace {

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tan;
using std::tanh;

// Fields of the A6 ansatz: profiles of omega = x1 wrapped in cosh/sinh of
// x2/alpha, with (E3, B3) closing the theta coupling.
FieldConfiguration a6_fields(double alpha, double c1, double c2,
                             std::function<double(double)> theta,
                             std::function<double(double)> phi1,
                             std::function<double(double)> phi1d,
                             std::function<double(double)> phi2,
                             std::function<double(double)> phi2d,
                             std::function<bool(const SpacetimePoint&)> domain = nullptr) {
    FieldConfiguration cfg;
    cfg.domain = std::move(domain);
    cfg.evaluator = [=](const SpacetimePoint& pt) {
        const double w = pt.x1;
        const double ch = cosh(pt.x2 / alpha), sh = sinh(pt.x2 / alpha);
        const double f1 = phi1(w), f2 = phi2(w);
        const double d1 = phi1d(w), d2 = phi2d(w);
        FieldState f;
        f.theta = theta(w);
        f.B = {f1 * ch - f2 * sh, alpha * d2 * ch - alpha * d1 * sh, -c1 * f.theta + c2};
        f.E = {alpha * d1 * ch - alpha * d2 * sh, f1 * sh - f2 * ch, c1};
        return f;
    };
    return cfg;
}

FamilyDescriptor nonlinear_a6_linear() {
    FamilyDescriptor d;
    d.id = "NonlinearA6-linear";
    d.anchor = "First let us present solutions linear in $\\omega$:";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, "alpha != 0"},
                      {"branch", ParamSpec::Kind::Real,
                       "0: m^2 > c1^2 requires c4^2 < 1; 1: c1^2 > m^2 requires c4^2 > 1"},
                      {"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, "c4^2 < 1"},
                      {"c5", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"sgn", ParamSpec::Kind::Real, "+1 or -1"}};
    d.defaults.reals = {{"alpha", 1.4}, {"branch", 0.0}, {"c1", 0.3}, {"c2", 0.2},
                        {"c4", 0.5},    {"c5", 0.4},     {"m", 0.8},  {"sgn", 1.0}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        const int branch = static_cast<int>(p.real("branch"));
        const double c4 = p.real("c4");
        const double m = p.real("m"), c1 = p.real("c1");
        out.push_back(strict_greater("|alpha| > 0", std::abs(p.real("alpha")), 0.0));
        if (branch == 0) {
            out.push_back(strict_less("c_4^2 < 1", c4 * c4, 1.0));
            out.push_back(strict_greater("m^2 - c1^2 > 0", m * m - c1 * c1, 0.0));
        } else {
            out.push_back(strict_greater("c_4^2 > 1", c4 * c4, 1.0));
            out.push_back(strict_greater("c1^2 - m^2 > 0", c1 * c1 - m * m, 0.0));
        }
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha"), c1 = p.real("c1"), c2 = p.real("c2");
        const double c4 = p.real("c4"), c5 = p.real("c5"), m = p.real("m");
        const double s = p.real("sgn") >= 0 ? 1.0 : -1.0;
        const int branch = static_cast<int>(p.real("branch"));
        double slope, theta0;
        if (branch == 0) {
            const double nu = sqrt(m * m - c1 * c1);
            const double root = sqrt(1.0 - c4 * c4);
            slope = s * nu / (alpha * root);
            theta0 = -c1 * c2 / (nu * nu) + s * root * c5 / nu;
        } else {
            const double mu = sqrt(c1 * c1 - m * m);
            const double root = sqrt(c4 * c4 - 1.0);
            slope = s * mu / (alpha * root);
            theta0 = c1 * c2 / (mu * mu) + s * root * c5 / mu;
        }
        auto theta = [=](double w) { return w / alpha + theta0; };
        auto phi2 = [=](double w) { return slope * w + c5; };
        auto phi2d = [=](double) { return slope; };
        auto phi1 = [=](double w) { return c4 * (slope * w + c5); };
        auto phi1d = [=](double) { return c4 * slope; };
        return a6_fields(alpha, c1, c2, theta, phi1, phi1d, phi2, phi2d);
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.3, 1.3); };
    return d;
}

FamilyDescriptor nonlinear_a6_airy() {
    FamilyDescriptor d;
    d.id = "NonlinearA6-Airy";
    d.anchor = "combination of Airy functions:";
    d.source_kind = "linear-mass";
    d.singular_loci = "none (Airy argument kept within range by the domain)";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, "alpha != 0"},
                      {"c1", ParamSpec::Kind::Real, "c1^2 == m^2"},
                      {"c2", ParamSpec::Kind::Real, "c1*c2 != 0"},
                      {"d2", ParamSpec::Kind::Real, ""},
                      {"k1", ParamSpec::Kind::Real, ""},
                      {"k2", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 0.8}, {"c1", 0.6}, {"c2", 0.4}, {"d2", 0.1},
                        {"k1", 0.5},    {"k2", 0.3}, {"m", 0.6}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        out.push_back(equality("c1^2 == m^2", p.real("c1") * p.real("c1"),
                               p.real("m") * p.real("m")));
        out.push_back(strict_greater("|c1*c2| > 0", std::abs(p.real("c1") * p.real("c2")), 0.0));
        out.push_back(strict_greater("|alpha| > 0", std::abs(p.real("alpha")), 0.0));
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha"), c1 = p.real("c1"), c2 = p.real("c2");
        const double d2 = p.real("d2"), k1 = p.real("k1"), k2 = p.real("k2");
        const double lam = std::cbrt(c1 * c2 / alpha);
        const double shift = 1.0 / (alpha * c1 * c2);
        auto theta = [=](double w) { return 0.5 * c1 * c2 * w * w + d2; };
        auto phi2 = [=](double w) {
            const double u = lam * (w - shift);
            return k1 * sf::airy_ai(u) + k2 * sf::airy_bi(u);
        };
        auto phi2d = [=](double w) {
            const double u = lam * (w - shift);
            return lam * (k1 * sf::airy_ai_deriv(u) + k2 * sf::airy_bi_deriv(u));
        };
        auto cfg = a6_fields(alpha, c1, c2, theta, phi2, phi2d, phi2, phi2d);
        cfg.domain = [=](const SpacetimePoint& pt) {
            return std::abs(lam * (pt.x1 - shift)) <= 14.5;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.4, 1.4); };
    return d;
}

FamilyDescriptor nonlinear_a6_elliptic() {
    FamilyDescriptor d;
    d.id = "NonlinearA6-elliptic-elementary";
    d.anchor = "admits particular solutions in elementary ones:";
    d.source_kind = "linear-mass";
    d.singular_loci = "tan poles / omega = 0 depending on the branch";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, "alpha != 0"},
                      {"branch", ParamSpec::Kind::Real, "0: tanh; 1: tan; 2: 1/omega"},
                      {"c1", ParamSpec::Kind::Real, "c1^2 == m^2"},
                      {"c4", ParamSpec::Kind::Real, "c4^2 > 1 (tanh), c4^2 < 1 (tan)"},
                      {"c5", ParamSpec::Kind::Real, "c5 < 1 (tanh), c5 > 1 (tan), c5 == 1 (pole)"},
                      {"c6", ParamSpec::Kind::Real, ""},
                      {"c7", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""},
                      {"sgn", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 0.9}, {"branch", 0.0}, {"c1", 0.7}, {"c4", 1.3},
                        {"c5", 0.6},    {"c6", 0.1},     {"c7", 0.2}, {"m", 0.7},
                        {"sgn", 1.0}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        const int branch = static_cast<int>(p.real("branch"));
        const double c4 = p.real("c4"), c5 = p.real("c5");
        out.push_back(equality("c1^2 == m^2", p.real("c1") * p.real("c1"),
                               p.real("m") * p.real("m")));
        if (branch == 0) {
            out.push_back(strict_less("c_5 < 1", c5, 1.0));
            out.push_back(strict_greater("c_4^2 > 1", c4 * c4, 1.0));
        } else if (branch == 1) {
            out.push_back(strict_greater("c_5 > 1", c5, 1.0));
            out.push_back(strict_less("c_4^2 < 1", c4 * c4, 1.0));
        } else {
            out.push_back(equality("c_5 == 1", c5, 1.0));
            out.push_back(strict_greater("c_4 > 1", c4, 1.0));
        }
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha"), c1 = p.real("c1");
        const double c4 = p.real("c4"), c5 = p.real("c5"), c6 = p.real("c6"), c7 = p.real("c7");
        const double s = p.real("sgn") >= 0 ? 1.0 : -1.0;
        const int branch = static_cast<int>(p.real("branch"));
        const double lam = 0.5 * (c4 * c4 - 1.0);
        const double kap = (1.0 - c5) / (alpha * alpha);
        std::function<double(double)> theta, phi2, phi2d;
        std::function<bool(const SpacetimePoint&)> domain;
        if (branch == 0) {
            const double q = sqrt(0.5 * kap);
            const double amp = s * sqrt(kap / lam);
            theta = [=](double w) {
                const double u = q * w + c7;
                return alpha * sqrt(2.0 * kap) * (u - tanh(u)) + c5 / alpha * w + c6;
            };
            phi2 = [=](double w) { return amp * tanh(q * w + c7); };
            phi2d = [=](double w) {
                const double t = tanh(q * w + c7);
                return amp * q * (1.0 - t * t);
            };
        } else if (branch == 1) {
            const double q = sqrt(-0.5 * kap);
            const double amp = s * sqrt(kap / lam);
            theta = [=](double w) {
                const double u = q * w + c7;
                return (alpha * kap / q) * (tan(u) - u) + c5 / alpha * w + c6;
            };
            phi2 = [=](double w) { return amp * tan(q * w + c7); };
            phi2d = [=](double w) {
                const double t = tan(q * w + c7);
                return amp * q * (1.0 + t * t);
            };
            domain = [=](const SpacetimePoint& pt) {
                return std::abs(cos(q * pt.x1 + c7)) >= 0.3;
            };
        } else {
            const double amp = s * sqrt(2.0 / lam);
            theta = [=](double w) { return -2.0 * alpha / w + w / alpha + c6; };
            phi2 = [=](double w) { return amp / w; };
            phi2d = [=](double w) { return -amp / (w * w); };
            domain = [](const SpacetimePoint& pt) { return std::abs(pt.x1) >= 0.45; };
        }
        auto phi1 = [=](double w) { return c4 * phi2(w); };
        auto phi1d = [=](double w) { return c4 * phi2d(w); };
        return a6_fields(alpha, c1, 0.0, theta, phi1, phi1d, phi2, phi2d, domain);
    };
    d.sample = [](SplitMix64& rng, const FamilyParams& p) {
        const int branch = static_cast<int>(p.real("branch"));
        SpacetimePoint pt = box_sample(rng, 1.2, 1.2);
        if (branch == 1) {
            const double q = sqrt(0.5 * (p.real("c5") - 1.0)) / std::abs(p.real("alpha"));
            for (int tries = 0; tries < 64; ++tries) {
                if (std::abs(cos(q * pt.x1 + p.real("c7"))) >= 0.4) break;
                pt.x1 = rng.uniform(-1.2, 1.2);
            }
        } else if (branch == 2) {
            pt.x1 = rng.sign() * rng.uniform(0.6, 1.6);
        }
        return pt;
    };
    return d;
}

FamilyDescriptor nonlinear_a6_lambert() {
    FamilyDescriptor d;
    d.id = "NonlinearA6-LambertW";
    d.anchor = "where $W$ is the Lambert function";
    d.source_kind = "linear-mass";
    d.singular_loci = "profile blows up at finite omega; domain trimmed to the integrated range";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, "alpha != 0"},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, "c4 != 0"},
                      {"c5", ParamSpec::Kind::Real, "W-branch constant"},
                      {"m", ParamSpec::Kind::Real, "c1^2 = m^2 + 1/alpha^2"},
                      {"sgn", ParamSpec::Kind::Real, "sign of phi1"}};
    d.defaults.reals = {{"alpha", 1.1}, {"c2", 0.3}, {"c4", 0.9},
                        {"c5", 0.8},    {"m", 0.5},  {"sgn", 1.0}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        out.push_back(strict_greater("|alpha| > 0", std::abs(p.real("alpha")), 0.0));
        out.push_back(strict_greater("|c4| > 0", std::abs(p.real("c4")), 0.0));
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha"), c2 = p.real("c2"), c4 = p.real("c4");
        const double c5 = p.real("c5"), m = p.real("m");
        const double s = p.real("sgn") >= 0 ? 1.0 : -1.0;
        const double c1 = sqrt(m * m + 1.0 / (alpha * alpha));
        const double ratio = s * sqrt(1.0 + c4 * c4);

        // phi2'' = c4 phi2' phi2 - phi2 / alpha^2, slope fixed by the
        // Lambert-W first integral at phi2 = 0.
        OdeSystem sys{2, [=](double, const double* y, double* dy) {
                          dy[0] = y[1];
                          dy[1] = c4 * y[1] * y[0] - y[0] / (alpha * alpha);
                      }};
        const double slope0 = (sf::lambert_w(c5 * c5) + 1.0) / (c4 * alpha * alpha);
        OdeOptions opts;
        opts.max_node_spacing = 0.0015;
        opts.rel_tol = opts.abs_tol = 1e-12;
        auto profile = std::make_shared<DenseProfile>(
            integrate_dense(sys, 0.0, 1.4, {0.0, slope0}, opts));
        auto left = integrate_dense(sys, 0.0, -1.4, {0.0, slope0}, opts);
        // merge the two half-profiles into one ascending record
        DenseProfile merged = left;
        for (std::size_t i = 1; i < profile->omega.size(); ++i) {
            merged.omega.push_back(profile->omega[i]);
            merged.state.push_back(profile->state[i]);
            merged.deriv.push_back(profile->deriv[i]);
        }
        merged.pair_of = {1, -1};
        *profile = std::move(merged);

        const double theta_off = c1 * c2 * alpha * alpha;
        std::function<double(double)> theta = [=](double w) {
            return alpha * c4 * profile->smooth_component(w, 0) + theta_off;
        };
        std::function<double(double)> phi2 = [=](double w) {
            return profile->smooth_component(w, 0);
        };
        std::function<double(double)> phi2d = [=](double w) {
            return profile->smooth_component(w, 1);
        };
        std::function<double(double)> phi1 = [=](double w) {
            return ratio * profile->smooth_component(w, 0);
        };
        std::function<double(double)> phi1d = [=](double w) {
            return ratio * profile->smooth_component(w, 1);
        };
        std::function<bool(const SpacetimePoint&)> domain = [=](const SpacetimePoint& pt) {
            return profile->covers(pt.x1, 0.08);
        };
        return a6_fields(alpha, c1, c2, theta, phi1, phi1d, phi2, phi2d, domain);
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        SpacetimePoint pt = box_sample(rng, 1.2, 1.2);
        pt.x1 = rng.uniform(-1.3, 1.3);
        return pt;
    };
    return d;
}

FamilyDescriptor nonlinear_a9() {
    FamilyDescriptor d;
    d.id = "NonlinearA9-particular";
    d.anchor = "Algebra $A_9: \\quad \\langle J_{23}+\\alpha";
    d.source_kind = "zero";
    d.singular_loci = "none";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, "alpha != 0"},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, "mode norm: mu = c3/(c6^2+c7^2)"},
                      {"c5", ParamSpec::Kind::Real, ""},
                      {"c6", ParamSpec::Kind::Real, ""},
                      {"c7", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 1.05}, {"c2", 0.3}, {"c3", 0.305},
                        {"c5", 0.1},     {"c6", 0.6}, {"c7", 0.5}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        out.push_back(strict_greater("|alpha| > 0", std::abs(p.real("alpha")), 0.0));
        out.push_back(strict_greater("c6^2 + c7^2 > 0",
                                     p.real("c6") * p.real("c6") + p.real("c7") * p.real("c7"),
                                     0.0));
        return out;
    };
    d.source = [](const FamilyParams&) { return SourceProfile::zero(); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha"), c2 = p.real("c2"), c3 = p.real("c3");
        const double c5 = p.real("c5"), c6 = p.real("c6"), c7 = p.real("c7");
        const double mu = c3 / (c6 * c6 + c7 * c7);
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double w = pt.x1, tau = pt.x0 / alpha;
            const double f1 = c6 * cos(mu * w) + c7 * sin(mu * w);
            const double f2 = c6 * sin(mu * w) - c7 * cos(mu * w);
            const double d1 = -mu * f2, d2 = mu * f1;
            const double ct = cos(tau), st = sin(tau);
            FieldState f;
            f.theta = (1.0 / alpha - alpha * mu * mu) * w + c5;
            f.E = {c2, f1 * ct - f2 * st, f1 * st + f2 * ct};
            f.B = {0.0, -alpha * d1 * ct + alpha * d2 * st, -alpha * d1 * st - alpha * d2 * ct};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.4, 1.4); };
    return d;
}

FamilyDescriptor nonlinear_a17() {
    FamilyDescriptor d;
    d.id = "NonlinearA17-particular";
    d.anchor = "Algebra $ A_{17}: \\quad \\langle J_{03}+\\alpha J_{12}, P_0, P_3";
    d.source_kind = "linear-mass";
    d.singular_loci = "cylinder axis; arctan branch cut";
    d.param_schema = {{"alpha", ParamSpec::Kind::Real, "alpha != 0"},
                      {"branch", ParamSpec::Kind::Real,
                       "0: log-linear theta with constant profiles; 1: Bessel profile"},
                      {"c1", ParamSpec::Kind::Real, "c1^2 == m^2"},
                      {"c2", ParamSpec::Kind::Real, "branch 0 needs c1*c2 == 0"},
                      {"c4", ParamSpec::Kind::Real, ""},
                      {"c5", ParamSpec::Kind::Real, ""},
                      {"c6", ParamSpec::Kind::Real, ""},
                      {"k1", ParamSpec::Kind::Real, "branch 1 Bessel coefficients"},
                      {"k2", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"alpha", 2.0}, {"branch", 0.0}, {"c1", 0.7}, {"c2", 0.0},
                        {"c4", 0.2},    {"c5", 0.4},     {"c6", 0.3}, {"k1", 0.5},
                        {"k2", 0.2},    {"m", 0.7}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        std::vector<ConstraintCheck> out;
        const int branch = static_cast<int>(p.real("branch"));
        out.push_back(equality("c1^2 == m^2", p.real("c1") * p.real("c1"),
                               p.real("m") * p.real("m")));
        out.push_back(strict_greater("|alpha| > 0", std::abs(p.real("alpha")), 0.0));
        if (branch == 0) {
            out.push_back(equality("branch 0 needs c1*c2 == 0", p.real("c1") * p.real("c2"), 0.0));
        } else {
            out.push_back(strict_less("branch 1 needs c1*c2 < 0",
                                      p.real("c1") * p.real("c2"), 0.0));
            out.push_back(strict_greater("branch 1 needs c4*alpha > 1",
                                         p.real("c4") * p.real("alpha"), 1.0));
        }
        return out;
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double alpha = p.real("alpha"), c1 = p.real("c1"), c2 = p.real("c2");
        const double c4 = p.real("c4"), c5 = p.real("c5"), c6 = p.real("c6");
        const double k1 = p.real("k1"), k2 = p.real("k2");
        const int branch = static_cast<int>(p.real("branch"));

        // The transverse fields are a potential/stream pair,
        //   E_perp = grad Phi,  B_perp = perp-grad Psi,
        //   Phi = alpha (phi2 em - phi1 ep),  Psi = alpha (phi2 em + phi1 ep)
        // with em/ep = exp(-+ zeta/alpha) / rho^2; the profiles satisfy
        //   alpha^2 phi'' = -(alpha theta' + 1) phi,
        //   theta'' = 2 alpha (phi1 phi2)' + c1 c2 e^{2 omega}.
        std::function<double(double)> theta, phi1, phi1d, phi2, phi2d;
        if (branch == 0) {
            theta = [=](double w) { return -w / alpha + c4; };
            phi1 = [=](double) { return c5; };
            phi1d = [](double) { return 0.0; };
            phi2 = [=](double) { return c6; };
            phi2d = [](double) { return 0.0; };
        } else {
            const double k = sqrt(-c1 * c2 / (2.0 * alpha));
            const double mu = sqrt(c4 * alpha - 1.0) / alpha;
            theta = [=](double w) {
                return 0.25 * c1 * c2 * exp(2.0 * w) - c4 * w + c5;
            };
            phi1 = [](double) { return 0.0; };
            phi1d = [](double) { return 0.0; };
            phi2 = [=](double w) {
                const auto z = sf::bessel_jy(mu, k * exp(w));
                return k1 * z.j + k2 * z.y;
            };
            phi2d = [=](double w) {
                const double x = k * exp(w);
                const auto z = sf::bessel_jy(mu, x);
                return x * (k1 * z.jp + k2 * z.yp);
            };
        }
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) {
            const double rho = std::hypot(pt.x1, pt.x2);
            return rho >= 0.5 && rho <= 2.6 && (pt.x1 > 0.0 || std::abs(pt.x2) >= 0.3);
        };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double rho2 = pt.x1 * pt.x1 + pt.x2 * pt.x2;
            const double w = 0.5 * log(rho2);
            const double zeta = std::atan2(pt.x2, pt.x1);
            const double em = exp(-zeta / alpha) / rho2, ep = exp(zeta / alpha) / rho2;
            const double f1 = phi1(w), f2 = phi2(w), d1 = phi1d(w), d2 = phi2d(w);
            const double x1 = pt.x1, x2 = pt.x2;
            FieldState f;
            f.theta = theta(w);
            f.B = {(alpha * d2 * x2 - f2 * x1) * em + (x1 * f1 + alpha * d1 * x2) * ep,
                   -(alpha * d2 * x1 + f2 * x2) * em - (alpha * d1 * x1 - f1 * x2) * ep,
                   -c1 * f.theta + c2};
            f.E = {(alpha * d2 * x1 + f2 * x2) * em - (x1 * alpha * d1 - f1 * x2) * ep,
                   (alpha * d2 * x2 - f2 * x1) * em - (alpha * d1 * x2 + f1 * x1) * ep, c1};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        return cyl_sample_quadrant(rng, 0.8, 2.3, 1.0, 1.0);
    };
    return d;
}

FamilyDescriptor weak_pd12() {
    FamilyDescriptor d;
    d.id = "WeakTransversality-pd12";
    d.anchor = "solves the two-dimension Laplace";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"branch", ParamSpec::Kind::Real,
                       "0: separated theta(x1,x2), constant stream function; "
                       "1: theta(x1) with a linear stream function"},
                      {"c1", ParamSpec::Kind::Real, "E3 strength"},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, "c1^2 != m^2"},
                      {"mu", ParamSpec::Kind::Real, "separation constant"},
                      {"kx1", ParamSpec::Kind::Real, ""},
                      {"kx2", ParamSpec::Kind::Real, ""},
                      {"ky1", ParamSpec::Kind::Real, ""},
                      {"ky2", ParamSpec::Kind::Real, ""},
                      {"slope", ParamSpec::Kind::Real, "stream-function gradient (branch 1)"}};
    d.defaults.reals = {{"branch", 0.0}, {"c1", 0.5},  {"c2", 0.3},  {"m", 0.8},
                        {"mu", 0.6},     {"kx1", 0.25}, {"kx2", 0.2}, {"ky1", 0.5},
                        {"ky2", 0.3},    {"slope", 0.4}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), m = p.real("m");
        return std::vector<ConstraintCheck>{strict_greater(
            "|c1^2 - m^2| > 0 (constant particular term)", std::abs(c1 * c1 - m * m), 1e-12)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const int branch = static_cast<int>(p.real("branch"));
        const double c1 = p.real("c1"), c2 = p.real("c2"), m = p.real("m");
        const double mu = p.real("mu");
        const double kx1 = p.real("kx1"), kx2 = p.real("kx2");
        const double ky1 = p.real("ky1"), ky2 = p.real("ky2");
        const double slope = p.real("slope");
        const double part = c1 * c2 / (c1 * c1 - m * m);
        const double km = sqrt(m * m + mu * mu);
        const double nm = sqrt(c1 * c1 + mu * mu);
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            FieldState f;
            double theta, b1 = 0.0, b2 = 0.0;
            if (branch == 0) {
                const double X = kx1 * exp(km * pt.x1) + kx2 * exp(-km * pt.x1);
                const double Y = ky1 * cos(nm * pt.x2) + ky2 * sin(nm * pt.x2);
                theta = X * Y + part;
            } else {
                // 1D slice admits a nontrivial transverse B = (0, -slope, .)
                const double q = m * m - c1 * c1;
                const double sq = sqrt(std::abs(q));
                theta = (q > 0 ? kx1 * exp(sq * pt.x1) + kx2 * exp(-sq * pt.x1)
                               : kx1 * cos(sq * pt.x1) + kx2 * sin(sq * pt.x1)) +
                        part;
                b2 = -slope;
            }
            f.theta = theta;
            f.E = {0.0, 0.0, c1};
            f.B = {b1, b2, -c1 * theta + c2};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.3, 1.2); };
    return d;
}

FamilyDescriptor weak_pd4() {
    FamilyDescriptor d;
    d.id = "WeakTransversality-pd4";
    d.anchor = "Analogously, imposing condition (\\ref{6.2}) we obtain the following";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"c1", ParamSpec::Kind::Real, "m^2 - c1^2 > 0 for the exponential branch"},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"c3", ParamSpec::Kind::Real, ""},
                      {"c4", ParamSpec::Kind::Real, ""},
                      {"c5", ParamSpec::Kind::Real, ""},
                      {"c6", ParamSpec::Kind::Real, ""},
                      {"c7", ParamSpec::Kind::Real, ""},
                      {"c8", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, ""}};
    d.defaults.reals = {{"c1", 0.6},  {"c2", 0.4},  {"c3", 0.3},  {"c4", 0.15},
                        {"c5", 0.1},  {"c6", 0.25}, {"c7", 0.2},  {"c8", 0.1},
                        {"m", 1.0}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), m = p.real("m");
        return std::vector<ConstraintCheck>{
            strict_greater("m^2 - c1^2 > 0", m * m - c1 * c1, 0.0)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), c2 = p.real("c2"), c3 = p.real("c3");
        const double c4 = p.real("c4"), c5 = p.real("c5"), c6 = p.real("c6");
        const double c7 = p.real("c7"), c8 = p.real("c8"), m = p.real("m");
        const double mu = sqrt(m * m - c1 * c1);
        const double part = c1 * c2 / (c1 * c1 - m * m);
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double ep = exp(mu * pt.x2), en = exp(-mu * pt.x2);
            const double S = c4 * ep + c5 * en;
            const double P = (c4 * ep - c5 * en) / mu;
            const double T = c7 * ep + c8 * en;
            FieldState f;
            f.theta = pt.x1 * S + T + part;
            const double e2 = c3 * exp(P) + c6 * exp(-P);
            const double b1 = c3 * exp(P) - c6 * exp(-P);
            f.E = {0.0, e2, c1};
            f.B = {b1, 0.0, -c1 * f.theta + c2};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.2, 1.2); };
    return d;
}

FamilyDescriptor weak_pd5() {
    FamilyDescriptor d;
    d.id = "WeakTransversality-pd5";
    d.anchor = "If conditions (\\ref{6.3}) are imposed then one obtains the solutions";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"a", ParamSpec::Kind::Real, "stream gradient (x1)"},
                      {"b", ParamSpec::Kind::Real, "stream gradient (x2)"},
                      {"c1", ParamSpec::Kind::Real, ""},
                      {"c2", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, "m^2 != c1^2"}};
    d.defaults.reals = {{"a", 0.4}, {"b", 0.3}, {"c1", 0.4}, {"c2", 0.3}, {"m", 0.9}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        const double c1 = p.real("c1"), m = p.real("m");
        return std::vector<ConstraintCheck>{
            strict_greater("|m^2 - c1^2| > 0", std::abs(m * m - c1 * c1), 1e-12)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double a = p.real("a"), b = p.real("b");
        const double c1 = p.real("c1"), c2 = p.real("c2"), m = p.real("m");
        const double theta0 = -(c1 * c2 + a * a + b * b) / (m * m - c1 * c1);
        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint&) {
            FieldState f;
            f.theta = theta0;
            f.E = {a, b, c1};
            f.B = {a, b, -c1 * theta0 + c2};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.5, 1.5); };
    return d;
}

FamilyDescriptor separated_a28() {
    FamilyDescriptor d;
    d.id = "SeparatedA28";
    d.anchor = "admits solutions in separated";
    d.source_kind = "linear-mass";
    d.singular_loci = "x0 + x3 = 0";
    d.param_schema = {{"c2", ParamSpec::Kind::Real, ""},
                      {"m", ParamSpec::Kind::Real, "m != 0"},
                      {"mu", ParamSpec::Kind::Real, "separation constant"},
                      {"amp_ss", ParamSpec::Kind::Real, "sin*sin mode amplitude"},
                      {"amp_cc", ParamSpec::Kind::Real, "cos*cos mode amplitude"}};
    d.defaults.reals = {{"c2", 0.4}, {"m", 1.0}, {"mu", 0.5}, {"amp_ss", 0.5}, {"amp_cc", 0.3}};
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        return std::vector<ConstraintCheck>{
            strict_greater("m != 0", std::abs(p.real("m")), 0.0)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double c2 = p.real("c2"), m = p.real("m"), mu = p.real("mu");
        const double ass = p.real("amp_ss"), acc = p.real("amp_cc");
        // Box(F/zeta) = 2 F_{omega zeta}/zeta: the separated mode needs
        // nu^2 = m^2/2 + mu^2 (the printed reduction drops the factor 2)
        const double num = sqrt(0.5 * m * m + mu * mu);
        FieldConfiguration cfg;
        cfg.domain = [](const SpacetimePoint& pt) { return pt.x0 + pt.x3 >= 0.5; };
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double zeta = pt.x0 + pt.x3;
            const double xx = pt.x0 * pt.x0 - pt.x1 * pt.x1 - pt.x2 * pt.x2 - pt.x3 * pt.x3;
            const double w = xx / (2.0 * zeta);
            const double xp = w + zeta, xm = w - zeta;
            const double phi = ass * sin(num * xp) * sin(mu * xm) +
                               acc * cos(num * xp) * cos(mu * xm);
            const double z2 = zeta * zeta, z3 = z2 * zeta;
            FieldState f;
            f.theta = phi / zeta;
            f.B = {-pt.x2 * c2 / z3, pt.x1 * c2 / z3, 0.0};
            f.E = {-pt.x1 * c2 / z3, -pt.x2 * c2 / z3, -c2 / z2};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) {
        return SpacetimePoint{rng.uniform(1.0, 2.0), rng.uniform(-1.0, 1.0),
                              rng.uniform(-1.0, 1.0), rng.uniform(-0.2, 0.8)};
    };
    return d;
}

FamilyDescriptor six_function() {
    FamilyDescriptor d;
    d.id = "SixFunction";
    d.anchor = "depend on six (!)";
    d.source_kind = "linear-mass";
    d.singular_loci = "none";
    d.param_schema = {{"m", ParamSpec::Kind::Real, "m != 0 pins theta"},
                      {"phi1", ParamSpec::Kind::Function1, "with derivative phi1d"},
                      {"phi1d", ParamSpec::Kind::Function1, ""},
                      {"phi2", ParamSpec::Kind::Function1, ""},
                      {"phi2d", ParamSpec::Kind::Function1, ""},
                      {"phi4", ParamSpec::Kind::Function1, ""},
                      {"phi4d", ParamSpec::Kind::Function1, ""},
                      {"phi5", ParamSpec::Kind::Function1, ""},
                      {"phi5d", ParamSpec::Kind::Function1, ""},
                      {"psis", ParamSpec::Kind::Function1, "lightlike modulation of the pair"},
                      {"psi1", ParamSpec::Kind::Harmonic2, "conjugate pair: d1 psi1 + d2 psi2 = 0"},
                      {"psi2", ParamSpec::Kind::Harmonic2, "and d1 psi2 - d2 psi1 = 0"}};
    d.defaults.reals = {{"m", 1.0}};
    d.defaults.functions = {
        {"phi1", [](double w) { return 0.3 * sin(w); }},
        {"phi1d", [](double w) { return 0.3 * cos(w); }},
        {"phi2", [](double w) { return 0.25 * cos(w); }},
        {"phi2d", [](double w) { return -0.25 * sin(w); }},
        {"phi4", [](double w) { return 0.2 * cos(w); }},
        {"phi4d", [](double w) { return -0.2 * sin(w); }},
        {"phi5", [](double w) { return 0.15 * sin(w); }},
        {"phi5d", [](double w) { return 0.15 * cos(w); }},
        {"psis", [](double w) { return 1.0 + 0.3 * sin(w); }},
    };
    d.defaults.functions2 = {
        {"psi1", [](double x1, double x2) { return 0.4 * x1 * x2; }},
        {"psi2", [](double x1, double x2) { return 0.2 * (x1 * x1 - x2 * x2); }},
    };
    d.kappa = 1.0;
    d.constraints = [](const FamilyParams& p) {
        return std::vector<ConstraintCheck>{
            strict_greater("m != 0 (theta pinned by the product relation)",
                           std::abs(p.real("m")), 0.0)};
    };
    d.source = [](const FamilyParams& p) { return SourceProfile::linear_mass(p.real("m")); };
    d.build = [](const FamilyParams& p) {
        const double m = p.real("m");
        auto phi1 = p.fn("phi1"), phi1d = p.fn("phi1d");
        auto phi2 = p.fn("phi2"), phi2d = p.fn("phi2d");
        auto phi4 = p.fn("phi4"), phi4d = p.fn("phi4d");
        auto phi5 = p.fn("phi5"), phi5d = p.fn("phi5d");
        auto psis = p.has_fn("psis") ? p.fn("psis") : std::function<double(double)>([](double) {
            return 1.0;
        });
        auto it1 = p.functions2.find("psi1");
        auto it2 = p.functions2.find("psi2");
        if (it1 == p.functions2.end() || it2 == p.functions2.end())
            throw MissingFunctionParam("SixFunction needs the psi1/psi2 pair");
        auto psi1 = it1->second;
        auto psi2 = it2->second;

        // conjugate-pair admissibility, checked numerically on a sample grid
        const double h = 1e-5;
        double worst = 0.0, wx1 = 0.0, wx2 = 0.0;
        for (double x1 = -1.2; x1 <= 1.21; x1 += 0.4) {
            for (double x2 = -1.2; x2 <= 1.21; x2 += 0.4) {
                const double d1p1 = (psi1(x1 + h, x2) - psi1(x1 - h, x2)) / (2 * h);
                const double d2p1 = (psi1(x1, x2 + h) - psi1(x1, x2 - h)) / (2 * h);
                const double d1p2 = (psi2(x1 + h, x2) - psi2(x1 - h, x2)) / (2 * h);
                const double d2p2 = (psi2(x1, x2 + h) - psi2(x1, x2 - h)) / (2 * h);
                const double r = std::max(std::abs(d1p1 + d2p2), std::abs(d1p2 - d2p1));
                if (r > worst) {
                    worst = r;
                    wx1 = x1;
                    wx2 = x2;
                }
            }
        }
        if (worst > 1e-6)
            throw CauchyRiemannViolation(
                "conjugate-pair condition violated; worst residual " + std::to_string(worst) +
                " at (x1, x2) = (" + std::to_string(wx1) + ", " + std::to_string(wx2) + ")");

        FieldConfiguration cfg;
        cfg.evaluator = [=](const SpacetimePoint& pt) {
            const double w = pt.x0 + pt.x3;
            const double f1 = phi1(w), f2 = phi2(w), f4 = phi4(w), f5 = phi5(w);
            const double g1 = phi1d(w), g2 = phi2d(w), g4 = phi4d(w), g5 = phi5d(w);
            const double sum15 = f1 + f5, sum24 = f2 + f4;
            const double theta = -sum15 * sum24 / (m * m);
            const double thetad = -((g1 + g5) * sum24 + sum15 * (g2 + g4)) / (m * m);
            const double s = psis(w);
            FieldState f;
            f.theta = theta;
            const double b1 =
                psi1(pt.x1, pt.x2) * s - pt.x1 * g1 - pt.x2 * (g4 - f5 * thetad);
            const double b2 =
                psi2(pt.x1, pt.x2) * s - pt.x2 * g5 + pt.x1 * (g2 - f1 * thetad);
            f.B = {b1, b2, sum15};
            f.E = {-b2, b1, sum24};
            return f;
        };
        return cfg;
    };
    d.sample = [](SplitMix64& rng, const FamilyParams&) { return box_sample(rng, 1.1, 1.1); };
    return d;
}

}  // namespace

void register_nonlinear_and_pde(std::vector<FamilyDescriptor>& out) {
    out.push_back(nonlinear_a6_linear());
    out.push_back(nonlinear_a6_airy());
    out.push_back(nonlinear_a6_elliptic());
    out.push_back(nonlinear_a6_lambert());
    out.push_back(nonlinear_a9());
    out.push_back(nonlinear_a17());
    out.push_back(weak_pd12());
    out.push_back(weak_pd4());
    out.push_back(weak_pd5());
    out.push_back(separated_a28());
    out.push_back(six_function());
}

}  // namespace axion::catalog::detail
