#pragma once

#include "axion/core.hpp"

namespace axion {

/// The nonlinearity F(theta) closing the axion wave equation, F = -dV/dtheta.
/// Extended admits dependence on s = p_mu p^mu as well.
struct SourceProfile {
    enum class Kind { Zero, Constant, LinearMass, Exponential, Extended, Custom };

    Kind kind = Kind::Zero;
    double c = 0.0;  // Constant value
    double m = 0.0;  // LinearMass: F = -m^2 theta
    double b = 0.0, a = 0.0;  // Exponential: F = b exp(a theta)
    std::function<double(double, double)> extended;  // f(theta, s)
    std::function<double(double)> custom;
    std::function<double(double)> potential;  // optional V with F = -dV/dtheta

    static SourceProfile zero() { return {}; }
    static SourceProfile constant(double c) {
        SourceProfile s;
        s.kind = Kind::Constant;
        s.c = c;
        return s;
    }
    static SourceProfile linear_mass(double m) {
        SourceProfile s;
        s.kind = Kind::LinearMass;
        s.m = m;
        return s;
    }
    static SourceProfile exponential(double b, double a) {
        SourceProfile s;
        s.kind = Kind::Exponential;
        s.b = b;
        s.a = a;
        return s;
    }
    static SourceProfile extended_fn(std::function<double(double, double)> f) {
        SourceProfile s;
        s.kind = Kind::Extended;
        s.extended = std::move(f);
        return s;
    }
    static SourceProfile custom_fn(std::function<double(double)> f) {
        SourceProfile s;
        s.kind = Kind::Custom;
        s.custom = std::move(f);
        return s;
    }

    bool needs_p() const { return kind == Kind::Extended; }

    double evaluate(double theta, double p_dot_p = 0.0) const {
        switch (kind) {
            case Kind::Zero: return 0.0;
            case Kind::Constant: return c;
            case Kind::LinearMass: return -m * m * theta;
            case Kind::Exponential: return b * std::exp(a * theta);
            case Kind::Extended: return extended(theta, p_dot_p);
            case Kind::Custom: return custom(theta);
        }
        return 0.0;
    }

    /// Worst mismatch of -dV/dtheta against F over sampled theta values.
    /// Only meaningful when a potential is attached.
    double potential_consistency(double theta_lo, double theta_hi, int samples = 11) const;
};

/// The nine scalar residuals of the coupled system at a point.
struct ResidualVector {
    double gauss = 0.0;
    Vec3 ampere{0, 0, 0};
    double divB = 0.0;
    Vec3 faraday{0, 0, 0};
    double axion = 0.0;

    double norm() const {
        double n = std::max(std::abs(gauss), std::max(std::abs(divB), std::abs(axion)));
        for (int a = 0; a < 3; ++a)
            n = std::max(n, std::max(std::abs(ampere[a]), std::abs(faraday[a])));
        return n;
    }
    std::array<double, 9> components() const {
        return {gauss, ampere[0], ampere[1], ampere[2], divB, faraday[0], faraday[1], faraday[2], axion};
    }
    static const char* component_name(int i);
};

/// Residuals of the pseudoscalar system:
///   div E - kappa p.B,  d0 E - curl B - kappa (p0 B + p x E),
///   div B,  d0 B + curl E,  Box theta + kappa E.B - F.
ResidualVector residual_pseudoscalar(const FieldConfiguration& cfg, const SpacetimePoint& pt,
                                     const SourceProfile& src, double kappa, const StencilScheme& s);

/// Residuals of the scalar-axion variant:
///   div E - kappa p.E,  d0 E - curl B - kappa (p0 E - p x B),
///   div B,  d0 B + curl E,  Box theta - kappa (B^2 - E^2) - F.
ResidualVector residual_scalar_variant(const FieldConfiguration& cfg, const SpacetimePoint& pt,
                                       const SourceProfile& src, double kappa, const StencilScheme& s);

/// Dispatch on cfg.metadata.scalar_variant.
ResidualVector residual_for(const FieldConfiguration& cfg, const SpacetimePoint& pt,
                            const SourceProfile& src, double kappa, const StencilScheme& s);

/// 1/2 p.p - 1/4 F_{mu nu} F^{mu nu} + (kappa/4) theta F.Fdual - V(theta),
/// assembled from (E, B) via E^a = F^{0a}, B^a = -1/2 eps^{0abc} F_{bc}.
double lagrangian_density(const FieldConfiguration& cfg, const SpacetimePoint& pt, double kappa,
                          const std::function<double(double)>& V, const StencilScheme& s);

/// Rescales (E, B) by exp(-theta), theta unchanged. Maps scalar-variant
/// solutions onto vacuum-Maxwell fields wherever the leftover Faraday and
/// div B couplings vanish (static radial families).
FieldConfiguration gauge_transform_scalar(const FieldConfiguration& cfg);

/// Residual of the transformed wave equation
///   Box theta - kappa (B^2 - E^2) exp(2 theta) - F
/// evaluated on a gauge-transformed configuration.
double endfin_residual(const FieldConfiguration& transformed, const SpacetimePoint& pt,
                       const SourceProfile& src, double kappa, const StencilScheme& s);

}  // namespace axion
