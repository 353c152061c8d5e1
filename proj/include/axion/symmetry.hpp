#pragma once

#include <array>
#include <string>
#include <vector>

#include "axion/core.hpp"
#include "axion/residuals.hpp"

namespace axion::sym {

/// Proper rotation, validated to 1e-12 (orthogonality and det = +1).
struct RotationMatrix {
    std::array<std::array<double, 3>, 3> m;

    static RotationMatrix identity();
    /// Rodrigues rotation about a (not necessarily unit) axis.
    static RotationMatrix about_axis(const Vec3& axis, double angle);
    void validate() const;  // throws InvalidRotation
    Vec3 apply(const Vec3& v) const;
    Vec3 apply_transposed(const Vec3& v) const;
    RotationMatrix times(const RotationMatrix& other) const;
};

/// Rapidity vector; the norm guard keeps cosh within double range.
struct BoostParams {
    Vec3 lambda{0, 0, 0};
    double norm() const { return axion::norm(lambda); }
    void validate() const;  // throws RangeError above norm 20
};

/// 4x4 boost matrix exp(lambda . K) acting on (x0, x1, x2, x3).
std::array<std::array<double, 4>, 4> lorentz_matrix(const BoostParams& lam);

/// Active transforms; solutions map to solutions.
FieldConfiguration rotate(const FieldConfiguration& cfg, const RotationMatrix& R);
FieldConfiguration boost(const FieldConfiguration& cfg, const BoostParams& lam);
FieldConfiguration translate(const FieldConfiguration& cfg, const Vec4& a);

/// Composite rotation-then-boost-then-translation element.
struct GroupElement {
    RotationMatrix R = RotationMatrix::identity();
    BoostParams lam;
    Vec4 shift{0, 0, 0, 0};
};
FieldConfiguration apply(const FieldConfiguration& cfg, const GroupElement& g);

// ---------------------------------------------------------------------------
// Infinitesimal generators
// ---------------------------------------------------------------------------

struct FieldVariation {
    Vec3 dE{0, 0, 0};
    Vec3 dB{0, 0, 0};
    double dtheta = 0.0;
};

struct GeneratorSpec {
    std::string id;
    std::function<Vec4(const SpacetimePoint&)> xi;
    std::function<FieldVariation(const SpacetimePoint&, const FieldState&)> field_action;
};

/// The kernel (Poincare) generators plus the extended ones
/// (theta shift P4, dilatation D, and X = a D - 2 P4).
const std::vector<GeneratorSpec>& generators();
const GeneratorSpec& generator(const std::string& id);  // throws UnknownSubalgebra
GeneratorSpec make_x_generator(double a);

struct DefectReport {
    double defect_eps = 0.0;
    double defect_half = 0.0;
    double order_estimate = 0.0;
    bool at_floor = false;
};

/// Applies the first-order flow exp(eps * gen) to a verified solution,
/// measures the worst residual over the points at eps and eps/2, and
/// estimates the defect order (>= 1.9 for true symmetries; exactly-invariant
/// flows sit at the residual floor and report order 2).
DefectReport generator_defect(const GeneratorSpec& gen, const FieldConfiguration& cfg,
                              const SourceProfile& src, double eps,
                              const std::vector<SpacetimePoint>& pts);

// ---------------------------------------------------------------------------
// Three-dimensional subalgebras
// ---------------------------------------------------------------------------

struct SubalgebraSpec {
    std::string id;  // A1 .. A30
    std::array<std::string, 3> basis_text;
    std::array<std::vector<std::pair<std::string, double>>, 3> basis;  // generator, coefficient
    int rank_xi = 3;
    std::string transversality;  // full | weak-only | extra-weak
    bool satisfies_la = true;
    std::string note;
};

/// The 30 conjugacy-class representatives, with the free alpha/beta slots
/// substituted.
std::vector<SubalgebraSpec> subalgebra_table(double alpha = 1.0, double beta = 1.0);
const SubalgebraSpec& subalgebra(const std::string& id, double alpha = 1.0, double beta = 1.0);

/// Numeric rank of the coordinate parts at a point (pivoted elimination).
int numeric_rank_xi(const SubalgebraSpec& spec, const SpacetimePoint& pt, double tol = 1e-9);

std::string subalgebra_table_json(double alpha = 1.0, double beta = 1.0);

}  // namespace axion::sym
