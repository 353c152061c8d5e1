#pragma once

#include <string>
#include <vector>

#include "axion/core.hpp"
#include "axion/residuals.hpp"

namespace axion::catalog {

struct ParamSpec {
    enum class Kind { Real, Function1, Harmonic2 };
    std::string name;
    Kind kind = Kind::Real;
    std::string constraint;  // human-readable constraint expression, if any
};

struct ConstraintCheck {
    std::string description;
    bool satisfied = true;
    double slack = 0.0;  // >= 0 when satisfied; negative magnitude of violation otherwise
};

struct FamilyParams {
    std::map<std::string, double> reals;
    std::map<std::string, std::function<double(double)>> functions;
    std::map<std::string, std::function<double(double, double)>> functions2;

    double real(const std::string& k) const;
    double real_or(const std::string& k, double fallback) const;
    std::function<double(double)> fn(const std::string& k) const;          // throws MissingFunctionParam
    std::function<double(double)> fn_or_zero(const std::string& k) const;  // absent -> 0
    bool has_fn(const std::string& k) const { return functions.count(k) > 0; }
};

struct FamilyDescriptor {
    std::string id;
    std::string anchor;       // verbatim source quote for the family
    std::string source_kind;  // e.g. "zero", "linear-mass", "extended f = p.p"
    std::string singular_loci;
    std::vector<ParamSpec> param_schema;
    FamilyParams defaults;
    bool scalar_variant = false;
    double kappa = 1.0;
    bool non_lie = false;

    std::function<std::vector<ConstraintCheck>(const FamilyParams&)> constraints;
    std::function<FieldConfiguration(const FamilyParams&)> build;
    std::function<SourceProfile(const FamilyParams&)> source;
    std::function<SpacetimePoint(SplitMix64&, const FamilyParams&)> sample;
};

class Registry {
  public:
    static const Registry& instance();

    const std::vector<FamilyDescriptor>& families() const { return families_; }
    const FamilyDescriptor& get(const std::string& id) const;  // throws UnknownFamily
    bool has(const std::string& id) const;
    std::vector<std::string> ids() const;  // sorted

  private:
    Registry();
    std::vector<FamilyDescriptor> families_;
};

/// Full registry listing.
std::vector<FamilyDescriptor> list_families();

/// Merge overrides onto the family defaults.
FamilyParams merged_params(const std::string& id, const FamilyParams& overrides);

/// Validate constraints, then build the configuration (with defaults filled in).
FieldConfiguration instantiate(const std::string& id, const FamilyParams& params = {});

/// Evaluate every constraint without building the configuration.
std::vector<ConstraintCheck> check_constraints(const std::string& id, const FamilyParams& params);

/// Source profile the family is verified against (defaults filled in).
SourceProfile family_source(const std::string& id, const FamilyParams& params = {});

/// Seeded admissible verification point for the family.
SpacetimePoint sample_point(const std::string& id, const FamilyParams& params, SplitMix64& rng);

/// Sum of two-scale plane-wave members sharing (alpha, nu, c3).
/// Throws MixedThetaParams when the shared constants differ, and
/// ConstraintViolation when any member violates its dispersion relation.
FieldConfiguration superpose(const std::string& id, const std::vector<FamilyParams>& members);

/// Instantiate a family overriding only its function-valued parameters.
/// Families with harmonic-pair inputs check the Cauchy-Riemann conditions at
/// sample points and throw CauchyRiemannViolation with the worst point.
FieldConfiguration apply_arbitrary_functions(
    const std::string& id, const std::map<std::string, std::function<double(double)>>& functions,
    const std::map<std::string, std::function<double(double, double)>>& functions2 = {});

/// Registry as a JSON document (ids, anchors, schemas, default samples,
/// constraints; 17-significant-digit rendering of real defaults).
std::string registry_json();

}  // namespace axion::catalog
