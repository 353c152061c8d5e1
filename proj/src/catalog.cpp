#include "axion/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "catalog_detail.hpp"

namespace axion::catalog {

double FamilyParams::real(const std::string& k) const {
    auto it = reals.find(k);
    if (it == reals.end()) throw UnknownFamily("missing real parameter: " + k);
    return it->second;
}

double FamilyParams::real_or(const std::string& k, double fallback) const {
    auto it = reals.find(k);
    return it == reals.end() ? fallback : it->second;
}

std::function<double(double)> FamilyParams::fn(const std::string& k) const {
    auto it = functions.find(k);
    if (it == functions.end()) throw MissingFunctionParam("missing function parameter: " + k);
    return it->second;
}

std::function<double(double)> FamilyParams::fn_or_zero(const std::string& k) const {
    auto it = functions.find(k);
    if (it == functions.end()) return [](double) { return 0.0; };
    return it->second;
}

Registry::Registry() {
    detail::register_exact_basic(families_);
    detail::register_linear_ode(families_);
    detail::register_nonlinear_and_pde(families_);
    std::sort(families_.begin(), families_.end(),
              [](const FamilyDescriptor& a, const FamilyDescriptor& b) { return a.id < b.id; });
}

const Registry& Registry::instance() {
    static Registry reg;
    return reg;
}

const FamilyDescriptor& Registry::get(const std::string& id) const {
    for (const auto& f : families_)
        if (f.id == id) return f;
    throw UnknownFamily("unknown family: " + id);
}

bool Registry::has(const std::string& id) const {
    for (const auto& f : families_)
        if (f.id == id) return true;
    return false;
}

std::vector<std::string> Registry::ids() const {
    std::vector<std::string> out;
    out.reserve(families_.size());
    for (const auto& f : families_) out.push_back(f.id);
    return out;
}

std::vector<FamilyDescriptor> list_families() { return Registry::instance().families(); }

FamilyParams merged_params(const std::string& id, const FamilyParams& overrides) {
    const auto& d = Registry::instance().get(id);
    FamilyParams p = d.defaults;
    for (const auto& [k, v] : overrides.reals) p.reals[k] = v;
    for (const auto& [k, v] : overrides.functions) p.functions[k] = v;
    for (const auto& [k, v] : overrides.functions2) p.functions2[k] = v;
    return p;
}

FieldConfiguration instantiate(const std::string& id, const FamilyParams& params) {
    const auto& d = Registry::instance().get(id);
    const FamilyParams p = merged_params(id, params);
    detail::enforce(d.constraints ? d.constraints(p) : std::vector<ConstraintCheck>{});
    FieldConfiguration cfg = d.build(p);
    cfg.metadata.family_id = d.id;
    cfg.metadata.scalar_variant = d.scalar_variant;
    cfg.metadata.kappa = d.kappa;
    cfg.metadata.non_lie = cfg.metadata.non_lie || d.non_lie;
    for (const auto& [k, v] : p.reals) cfg.metadata.params[k] = v;
    return cfg;
}

std::vector<ConstraintCheck> check_constraints(const std::string& id, const FamilyParams& params) {
    const auto& d = Registry::instance().get(id);
    const FamilyParams p = merged_params(id, params);
    return d.constraints ? d.constraints(p) : std::vector<ConstraintCheck>{};
}

SourceProfile family_source(const std::string& id, const FamilyParams& params) {
    const auto& d = Registry::instance().get(id);
    return d.source(merged_params(id, params));
}

SpacetimePoint sample_point(const std::string& id, const FamilyParams& params, SplitMix64& rng) {
    const auto& d = Registry::instance().get(id);
    return d.sample(rng, merged_params(id, params));
}

FieldConfiguration superpose(const std::string& id, const std::vector<FamilyParams>& members) {
    if (id != "TwoScaleSuperposable")
        throw UnknownFamily("superpose supports the TwoScaleSuperposable family only");
    if (members.empty()) throw RangeError("superpose needs at least one member");

    std::vector<FamilyParams> full;
    full.reserve(members.size());
    for (const auto& m : members) full.push_back(merged_params(id, m));

    const double alpha = full[0].real("alpha");
    const double nu = full[0].real("nu");
    const double c3 = full[0].real_or("c3", 0.0);
    for (const auto& m : full) {
        if (std::abs(m.real("alpha") - alpha) > 1e-12 || std::abs(m.real("nu") - nu) > 1e-12 ||
            std::abs(m.real_or("c3", 0.0) - c3) > 1e-12)
            throw MixedThetaParams("members disagree on the shared (alpha, nu, c3)");
    }

    std::vector<FieldConfiguration> cfgs;
    cfgs.reserve(full.size());
    for (const auto& m : full) cfgs.push_back(instantiate(id, m));

    FieldConfiguration out = cfgs.front();
    out.evaluator = [cfgs](const SpacetimePoint& pt) {
        FieldState acc = cfgs.front()(pt);
        for (std::size_t i = 1; i < cfgs.size(); ++i) {
            const FieldState f = cfgs[i](pt);
            acc.E = acc.E + f.E;
            acc.B = acc.B + f.B;
        }
        return acc;  // shared theta, summed fields
    };
    out.metadata.family_id = "TwoScaleSuperposable.sum";
    out.metadata.params["members"] = static_cast<double>(cfgs.size());
    return out;
}

FieldConfiguration apply_arbitrary_functions(
    const std::string& id, const std::map<std::string, std::function<double(double)>>& functions,
    const std::map<std::string, std::function<double(double, double)>>& functions2) {
    FamilyParams p;
    p.functions = functions;
    p.functions2 = functions2;
    return instantiate(id, p);
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string registry_json() {
    std::ostringstream os;
    os << "{\n  \"families\": [\n";
    const auto fams = list_families();
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const auto& f = fams[i];
        os << "    {\n";
        os << "      \"id\": \"" << json_escape(f.id) << "\",\n";
        os << "      \"anchor\": \"" << json_escape(f.anchor) << "\",\n";
        os << "      \"source\": \"" << json_escape(f.source_kind) << "\",\n";
        os << "      \"system\": \"" << (f.scalar_variant ? "scalar" : "pseudoscalar") << "\",\n";
        os << "      \"kappa\": " << fmt17(f.kappa) << ",\n";
        os << "      \"singular_loci\": \"" << json_escape(f.singular_loci) << "\",\n";
        os << "      \"params\": [";
        for (std::size_t j = 0; j < f.param_schema.size(); ++j) {
            const auto& ps = f.param_schema[j];
            os << (j ? ", " : "") << "{\"name\": \"" << json_escape(ps.name) << "\", \"kind\": \""
               << (ps.kind == ParamSpec::Kind::Real
                       ? "real"
                       : ps.kind == ParamSpec::Kind::Function1 ? "function" : "harmonic-pair")
               << "\"";
            if (!ps.constraint.empty())
                os << ", \"constraint\": \"" << json_escape(ps.constraint) << "\"";
            os << "}";
        }
        os << "],\n";
        os << "      \"default_sample\": {";
        bool first = true;
        for (const auto& [k, v] : f.defaults.reals) {
            os << (first ? "" : ", ") << "\"" << json_escape(k) << "\": " << fmt17(v);
            first = false;
        }
        os << "}\n    }" << (i + 1 < fams.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace axion::catalog
