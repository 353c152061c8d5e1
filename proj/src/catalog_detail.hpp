#pragma once

// Internal helpers shared by the catalog family builders.

#include <cmath>
#include <vector>

#include "axion/catalog.hpp"

namespace axion::catalog::detail {

inline double getp(const FamilyParams& p, const std::string& k) { return p.real(k); }

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

inline SpacetimePoint box_sample(SplitMix64& rng, double time_half, double space_half) {
    return {rng.uniform(-time_half, time_half), rng.uniform(-space_half, space_half),
            rng.uniform(-space_half, space_half), rng.uniform(-space_half, space_half)};
}

inline Vec3 random_direction(SplitMix64& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

/// Random point with spatial radius in [r0, r1] and x0 in [-t, t].
inline SpacetimePoint shell_sample(SplitMix64& rng, double r0, double r1, double t) {
    const double r = rng.uniform(r0, r1);
    const Vec3 n = random_direction(rng);
    return {rng.uniform(-t, t), r * n[0], r * n[1], r * n[2]};
}

/// Random point with cylindrical radius sqrt(x1^2+x2^2) in [x0r, x1r],
/// first quadrant in (x1, x2) to stay clear of arctan branch cuts.
inline SpacetimePoint cyl_sample_quadrant(SplitMix64& rng, double rho0, double rho1,
                                          double t, double z) {
    const double rho = rng.uniform(rho0, rho1);
    const double phi = rng.uniform(0.25, 1.32);  // within the first quadrant
    return {rng.uniform(-t, t), rho * std::cos(phi), rho * std::sin(phi),
            rng.uniform(-z, z)};
}

// ---------------------------------------------------------------------------
// theta profiles for the reduced linear oscillator  theta'' = -a theta + c
// ---------------------------------------------------------------------------

struct LinearTheta {
    double a = 0.0, c = 0.0, k1 = 0.0, k2 = 0.0;

    double value(double w) const {
        if (a > 1e-14) {
            const double mu = std::sqrt(a);
            return k1 * std::cos(mu * w) + k2 * std::sin(mu * w) + c / a;
        }
        if (a < -1e-14) {
            const double s = std::sqrt(-a);
            return k1 * std::exp(s * w) + k2 * std::exp(-s * w) + c / a;
        }
        return 0.5 * c * w * w + k1 * w + k2;
    }
    double deriv(double w) const {
        if (a > 1e-14) {
            const double mu = std::sqrt(a);
            return mu * (-k1 * std::sin(mu * w) + k2 * std::cos(mu * w));
        }
        if (a < -1e-14) {
            const double s = std::sqrt(-a);
            return s * (k1 * std::exp(s * w) - k2 * std::exp(-s * w));
        }
        return c * w + k1;
    }
};

// ---------------------------------------------------------------------------
// Constraint helpers
// ---------------------------------------------------------------------------

inline ConstraintCheck equality(const std::string& desc, double lhs, double rhs,
                                double tol = 1e-9) {
    const double miss = std::abs(lhs - rhs);
    return {desc, miss <= tol, tol - miss};
}

inline ConstraintCheck strict_less(const std::string& desc, double lhs, double rhs) {
    return {desc, lhs < rhs, rhs - lhs};
}

inline ConstraintCheck strict_greater(const std::string& desc, double lhs, double rhs) {
    return {desc, lhs > rhs, lhs - rhs};
}

inline void enforce(const std::vector<ConstraintCheck>& checks) {
    for (const auto& c : checks)
        if (!c.satisfied)
            throw ConstraintViolation(c.description);
}

// Family builder groups (one per translation unit).
void register_exact_basic(std::vector<FamilyDescriptor>& out);
void register_linear_ode(std::vector<FamilyDescriptor>& out);
void register_nonlinear_and_pde(std::vector<FamilyDescriptor>& out);

}  // namespace axion::catalog::detail
