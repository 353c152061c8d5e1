#include "axion/residuals.hpp"

namespace axion {

double SourceProfile::potential_consistency(double theta_lo, double theta_hi, int samples) const {
    if (!potential) return 0.0;
    const double dh = 1e-5;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double th = theta_lo + (theta_hi - theta_lo) * i / (samples - 1);
        const double fd = -(potential(th + dh) - potential(th - dh)) / (2.0 * dh);
        worst = std::max(worst, std::abs(fd - evaluate(th, 0.0)));
    }
    return worst;
}

const char* ResidualVector::component_name(int i) {
    static const char* names[9] = {"gauss",    "ampere1",  "ampere2", "ampere3", "divB",
                                   "faraday1", "faraday2", "faraday3", "axion"};
    return names[i >= 0 && i < 9 ? i : 0];
}

namespace {

/// All field values on the 4-axis central stencil, evaluated once.
/// slot [mu][k]: offset k*h along axis mu, k in {-2,-1,1,2}; center separate.
struct StencilBatch {
    FieldState center;
    FieldState at[4][4];
    int order;
    double h;

    static int slot(int k) { return k < 0 ? k + 2 : k + 1; }  // -2,-1,1,2 -> 0,1,2,3

    double d1(int mu, const std::function<double(const FieldState&)>& pick) const {
        if (order == 2)
            return (pick(at[mu][slot(1)]) - pick(at[mu][slot(-1)])) / (2.0 * h);
        return (pick(at[mu][slot(-2)]) - 8.0 * pick(at[mu][slot(-1)]) +
                8.0 * pick(at[mu][slot(1)]) - pick(at[mu][slot(2)])) /
               (12.0 * h);
    }
    double d2(int mu, const std::function<double(const FieldState&)>& pick) const {
        if (order == 2)
            return (pick(at[mu][slot(1)]) - 2.0 * pick(center) + pick(at[mu][slot(-1)])) / (h * h);
        return (-pick(at[mu][slot(-2)]) + 16.0 * pick(at[mu][slot(-1)]) - 30.0 * pick(center) +
                16.0 * pick(at[mu][slot(1)]) - pick(at[mu][slot(2)])) /
               (12.0 * h * h);
    }
};

StencilBatch gather(const FieldConfiguration& cfg, const SpacetimePoint& pt, const StencilScheme& s) {
    StencilBatch b;
    b.order = s.order;
    b.h = s.h;
    const int reach = (s.order == 2) ? 1 : 2;
    if (!cfg.admissible(pt)) throw DomainViolation("evaluation point not admissible");
    for (int mu = 0; mu < 4; ++mu) {
        for (int k = -reach; k <= reach; ++k) {
            if (k == 0) continue;
            const SpacetimePoint q = shifted(pt, mu, k * s.h);
            if (!cfg.admissible(q)) throw DomainViolation("stencil point leaves the admissible domain");
            b.at[mu][StencilBatch::slot(k)] = cfg(q);
            if (!b.at[mu][StencilBatch::slot(k)].finite())
                throw NonFiniteField("evaluator returned a non-finite field state");
        }
    }
    b.center = cfg(pt);
    if (!b.center.finite()) throw NonFiniteField("evaluator returned a non-finite field state");
    return b;
}

struct Derivatives {
    Vec3 d0E, d0B, curlE, curlB;
    double divE, divB;
    Vec4 p;        // d_mu theta
    double boxTheta;
};

Derivatives differentiate(const StencilBatch& b) {
    Derivatives d;
    auto Ec = [](int c) { return [c](const FieldState& f) { return f.E[c]; }; };
    auto Bc = [](int c) { return [c](const FieldState& f) { return f.B[c]; }; };
    auto Th = [](const FieldState& f) { return f.theta; };

    for (int c = 0; c < 3; ++c) {
        d.d0E[c] = b.d1(0, Ec(c));
        d.d0B[c] = b.d1(0, Bc(c));
    }
    // dv[a][c]: derivative of component c along spatial axis a+1
    double dE[3][3], dB[3][3];
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) {
            dE[a][c] = b.d1(a + 1, Ec(c));
            dB[a][c] = b.d1(a + 1, Bc(c));
        }
    d.curlE = {dE[1][2] - dE[2][1], dE[2][0] - dE[0][2], dE[0][1] - dE[1][0]};
    d.curlB = {dB[1][2] - dB[2][1], dB[2][0] - dB[0][2], dB[0][1] - dB[1][0]};
    d.divE = dE[0][0] + dE[1][1] + dE[2][2];
    d.divB = dB[0][0] + dB[1][1] + dB[2][2];
    for (int mu = 0; mu < 4; ++mu) d.p[mu] = b.d1(mu, Th);
    d.boxTheta = b.d2(0, Th);
    for (int a = 1; a < 4; ++a) d.boxTheta -= b.d2(a, Th);
    return d;
}

Vec4 effective_p(const StencilBatch& b, const Derivatives& d) {
    if (b.center.p) return *b.center.p;
    return d.p;
}

}  // namespace

ResidualVector residual_pseudoscalar(const FieldConfiguration& cfg, const SpacetimePoint& pt,
                                     const SourceProfile& src, double kappa, const StencilScheme& s) {
    const StencilBatch b = gather(cfg, pt, s);
    const Derivatives d = differentiate(b);
    const Vec4 p = effective_p(b, d);
    const Vec3 pv{p[1], p[2], p[3]};
    const Vec3 E = b.center.E, B = b.center.B;

    ResidualVector r;
    r.gauss = d.divE - kappa * dot(pv, B);
    const Vec3 coupling = kappa * (p[0] * B + cross(pv, E));
    for (int c = 0; c < 3; ++c) {
        r.ampere[c] = d.d0E[c] - d.curlB[c] - coupling[c];
        r.faraday[c] = d.d0B[c] + d.curlE[c];
    }
    r.divB = d.divB;
    const double pp = p[0] * p[0] - dot(pv, pv);
    r.axion = d.boxTheta + kappa * dot(E, B) - src.evaluate(b.center.theta, pp);
    return r;
}

ResidualVector residual_scalar_variant(const FieldConfiguration& cfg, const SpacetimePoint& pt,
                                       const SourceProfile& src, double kappa, const StencilScheme& s) {
    const StencilBatch b = gather(cfg, pt, s);
    const Derivatives d = differentiate(b);
    const Vec4 p = effective_p(b, d);
    const Vec3 pv{p[1], p[2], p[3]};
    const Vec3 E = b.center.E, B = b.center.B;

    ResidualVector r;
    r.gauss = d.divE - kappa * dot(pv, E);
    const Vec3 coupling = kappa * (p[0] * E - cross(pv, B));
    for (int c = 0; c < 3; ++c) {
        r.ampere[c] = d.d0E[c] - d.curlB[c] - coupling[c];
        r.faraday[c] = d.d0B[c] + d.curlE[c];
    }
    r.divB = d.divB;
    const double pp = p[0] * p[0] - dot(pv, pv);
    r.axion = d.boxTheta - kappa * (dot(B, B) - dot(E, E)) - src.evaluate(b.center.theta, pp);
    return r;
}

ResidualVector residual_for(const FieldConfiguration& cfg, const SpacetimePoint& pt,
                            const SourceProfile& src, double kappa, const StencilScheme& s) {
    return cfg.metadata.scalar_variant ? residual_scalar_variant(cfg, pt, src, kappa, s)
                                       : residual_pseudoscalar(cfg, pt, src, kappa, s);
}

double lagrangian_density(const FieldConfiguration& cfg, const SpacetimePoint& pt, double kappa,
                          const std::function<double(double)>& V, const StencilScheme& s) {
    if (!cfg.admissible(pt)) throw DomainViolation("evaluation point not admissible");
    const FieldState f = cfg(pt);
    Vec4 p;
    if (f.p) {
        p = *f.p;
    } else {
        ScalarMap th = [&cfg](const SpacetimePoint& q) { return cfg(q).theta; };
        p = numeric_gradient(th, pt, s, cfg.domain);
    }
    const double pp = p[0] * p[0] - (p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
    // With E^a = F^{0a} and B^a = -1/2 eps^{0abc} F_{bc}:
    //   F_{mu nu} F^{mu nu} = 2 (B^2 - E^2),  F_{mu nu} Fdual^{mu nu} = 4 E.B
    const double FF = 2.0 * (dot(f.B, f.B) - dot(f.E, f.E));
    const double FFdual = 4.0 * dot(f.E, f.B);
    return 0.5 * pp - 0.25 * FF + 0.25 * kappa * f.theta * FFdual - (V ? V(f.theta) : 0.0);
}

FieldConfiguration gauge_transform_scalar(const FieldConfiguration& cfg) {
    FieldConfiguration out = cfg;
    auto base = cfg.evaluator;
    out.evaluator = [base](const SpacetimePoint& pt) {
        FieldState f = base(pt);
        const double w = std::exp(-f.theta);
        f.E = w * f.E;
        f.B = w * f.B;
        f.p.reset();
        return f;
    };
    out.metadata.family_id = cfg.metadata.family_id + ".gauge";
    out.analytic_gradient_available = false;
    return out;
}

double endfin_residual(const FieldConfiguration& transformed, const SpacetimePoint& pt,
                       const SourceProfile& src, double kappa, const StencilScheme& s) {
    const StencilBatch b = gather(transformed, pt, s);
    const Derivatives d = differentiate(b);
    const Vec4 p = effective_p(b, d);
    const double pp = p[0] * p[0] - (p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
    const FieldState& f = b.center;
    const double scaled = (dot(f.B, f.B) - dot(f.E, f.E)) * std::exp(2.0 * f.theta);
    return d.boxTheta - kappa * scaled - src.evaluate(f.theta, pp);
}

}  // namespace axion
