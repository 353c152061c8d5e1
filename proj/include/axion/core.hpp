#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace axion {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Event in natural units (c = 1): x0 is time, x1..x3 Cartesian space.
struct SpacetimePoint {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    double operator[](int mu) const {
        switch (mu) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }
    double& operator[](int mu) {
        switch (mu) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }
    Vec3 spatial() const { return {x1, x2, x3}; }
    double r() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
    double max_abs() const {
        return std::max(std::max(std::abs(x0), std::abs(x1)), std::max(std::abs(x2), std::abs(x3)));
    }
    bool finite() const {
        return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
    }
};

inline SpacetimePoint shifted(SpacetimePoint p, int mu, double d) {
    p[mu] += d;
    return p;
}

/// Field values at one event. p, when present, carries p_mu = d_mu(theta).
struct FieldState {
    Vec3 E{0, 0, 0};
    Vec3 B{0, 0, 0};
    double theta = 0.0;
    std::optional<Vec4> p;

    bool finite() const {
        for (int a = 0; a < 3; ++a)
            if (!std::isfinite(E[a]) || !std::isfinite(B[a])) return false;
        return std::isfinite(theta);
    }
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};
struct NonFiniteField : std::runtime_error {
    explicit NonFiniteField(const std::string& what) : std::runtime_error(what) {}
};
struct OutOfSupportedRange : std::runtime_error {
    explicit OutOfSupportedRange(const std::string& what) : std::runtime_error(what) {}
};
struct BelowBranchPoint : std::runtime_error {
    explicit BelowBranchPoint(const std::string& what) : std::runtime_error(what) {}
};
struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};
struct MissingFunctionParam : std::runtime_error {
    explicit MissingFunctionParam(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownFamily : std::runtime_error {
    explicit UnknownFamily(const std::string& what) : std::runtime_error(what) {}
};
struct MixedThetaParams : std::runtime_error {
    explicit MixedThetaParams(const std::string& what) : std::runtime_error(what) {}
};
struct CauchyRiemannViolation : std::runtime_error {
    explicit CauchyRiemannViolation(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidRotation : std::runtime_error {
    explicit InvalidRotation(const std::string& what) : std::runtime_error(what) {}
};
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};
struct NotASolution : std::runtime_error {
    explicit NotASolution(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownSubalgebra : std::runtime_error {
    explicit UnknownSubalgebra(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedBranch : std::runtime_error {
    explicit UnsupportedBranch(const std::string& what) : std::runtime_error(what) {}
};
struct SingularEncounter : std::runtime_error {
    explicit SingularEncounter(const std::string& what) : std::runtime_error(what) {}
};
struct StepUnderflow : std::runtime_error {
    explicit StepUnderflow(const std::string& what) : std::runtime_error(what) {}
};
struct StiffnessFailure : std::runtime_error {
    explicit StiffnessFailure(const std::string& what) : std::runtime_error(what) {}
};
struct ProfileRangeExceeded : std::runtime_error {
    explicit ProfileRangeExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct SingularLocus : std::runtime_error {
    explicit SingularLocus(const std::string& what) : std::runtime_error(what) {}
};
struct WindowMismatch : std::runtime_error {
    explicit WindowMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct BlowUp : std::runtime_error {
    explicit BlowUp(const std::string& what) : std::runtime_error(what) {}
};
struct CourantViolation : std::runtime_error {
    explicit CourantViolation(const std::string& what) : std::runtime_error(what) {}
};
struct ConfigParseError : std::runtime_error {
    explicit ConfigParseError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Field configurations
// ---------------------------------------------------------------------------

/// One solution family instance: a deterministic evaluator plus the predicate
/// that marks where it may be queried. Evaluators must only be called where
/// the predicate holds.
struct FieldConfiguration {
    std::function<FieldState(const SpacetimePoint&)> evaluator;
    std::function<bool(const SpacetimePoint&)> domain;

    struct Metadata {
        std::string family_id;
        std::map<std::string, double> params;
        bool scalar_variant = false;  // verified against the scalar-axion system
        bool non_lie = false;         // not reachable by classical symmetry reduction
        double kappa = 1.0;           // coupling the family was derived with
    } metadata;

    bool analytic_gradient_available = false;

    FieldState operator()(const SpacetimePoint& pt) const { return evaluator(pt); }
    bool admissible(const SpacetimePoint& pt) const { return !domain || domain(pt); }
};

// ---------------------------------------------------------------------------
// Finite-difference stencils
// ---------------------------------------------------------------------------

/// Central-difference scheme. order is 2 or 4, h the per-axis step.
struct StencilScheme {
    int order = 4;
    double h = 1e-3;
};

/// Step scaled by the point's magnitude so truncation stays uniform on
/// O(1)-curvature fields while avoiding cancellation near the origin.
inline StencilScheme default_scheme(const SpacetimePoint& pt) {
    return StencilScheme{4, 1e-3 * std::max(1.0, pt.max_abs())};
}

/// Uniform residual acceptance rule: truncation plus round-off floor.
inline double residual_tolerance(const StencilScheme& s) {
    return 100.0 * std::pow(s.h, s.order) + 1e-9;
}

using ScalarMap = std::function<double(const SpacetimePoint&)>;
using VectorMap = std::function<Vec3(const SpacetimePoint&)>;

/// (d0 f, d1 f, d2 f, d3 f) by central differences, O(h^order) truncation.
Vec4 numeric_gradient(const ScalarMap& f, const SpacetimePoint& pt, const StencilScheme& s,
                      const std::function<bool(const SpacetimePoint&)>& domain = nullptr);

/// Box f = d0^2 f - laplacian(f), O(h^order).
double dalembertian(const ScalarMap& f, const SpacetimePoint& pt, const StencilScheme& s,
                    const std::function<bool(const SpacetimePoint&)>& domain = nullptr);

struct CurlDiv {
    Vec3 curl;
    double div;
};

/// Central-difference curl and divergence of a spatial vector map.
CurlDiv curl_and_div(const VectorMap& v, const SpacetimePoint& pt, const StencilScheme& s,
                     const std::function<bool(const SpacetimePoint&)>& domain = nullptr);

// ---------------------------------------------------------------------------
// Deterministic RNG (identical across platforms and thread counts)
// ---------------------------------------------------------------------------

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform sign.
    double sign() { return (next() & 1) ? 1.0 : -1.0; }
};

/// Stable per-stream seed derivation.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    g.next();
    return g.next();
}
inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return mix_seed(seed, h);
}

}  // namespace axion
