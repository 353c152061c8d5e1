#include "axion/core.hpp"

namespace axion {

namespace {

void check_axis_stencil(const std::function<bool(const SpacetimePoint&)>& domain,
                        const SpacetimePoint& pt, int mu, int order, double h) {
    if (!domain) return;
    const int reach = (order == 2) ? 1 : 2;
    for (int k = -reach; k <= reach; ++k) {
        if (!domain(shifted(pt, mu, k * h)))
            throw DomainViolation("stencil point leaves the admissible domain");
    }
}

double d1(const ScalarMap& f, const SpacetimePoint& pt, int mu, int order, double h) {
    if (order == 2) {
        return (f(shifted(pt, mu, h)) - f(shifted(pt, mu, -h))) / (2.0 * h);
    }
    const double fm2 = f(shifted(pt, mu, -2 * h));
    const double fm1 = f(shifted(pt, mu, -h));
    const double fp1 = f(shifted(pt, mu, h));
    const double fp2 = f(shifted(pt, mu, 2 * h));
    return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

double d2(const ScalarMap& f, const SpacetimePoint& pt, int mu, int order, double h) {
    const double f0 = f(pt);
    if (order == 2) {
        return (f(shifted(pt, mu, h)) - 2.0 * f0 + f(shifted(pt, mu, -h))) / (h * h);
    }
    const double fm2 = f(shifted(pt, mu, -2 * h));
    const double fm1 = f(shifted(pt, mu, -h));
    const double fp1 = f(shifted(pt, mu, h));
    const double fp2 = f(shifted(pt, mu, 2 * h));
    return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
}

}  // namespace

Vec4 numeric_gradient(const ScalarMap& f, const SpacetimePoint& pt, const StencilScheme& s,
                      const std::function<bool(const SpacetimePoint&)>& domain) {
    Vec4 g{};
    for (int mu = 0; mu < 4; ++mu) {
        check_axis_stencil(domain, pt, mu, s.order, s.h);
        g[mu] = d1(f, pt, mu, s.order, s.h);
    }
    return g;
}

double dalembertian(const ScalarMap& f, const SpacetimePoint& pt, const StencilScheme& s,
                    const std::function<bool(const SpacetimePoint&)>& domain) {
    for (int mu = 0; mu < 4; ++mu) check_axis_stencil(domain, pt, mu, s.order, s.h);
    double box = d2(f, pt, 0, s.order, s.h);
    for (int a = 1; a < 4; ++a) box -= d2(f, pt, a, s.order, s.h);
    return box;
}

CurlDiv curl_and_div(const VectorMap& v, const SpacetimePoint& pt, const StencilScheme& s,
                     const std::function<bool(const SpacetimePoint&)>& domain) {
    for (int a = 1; a < 4; ++a) check_axis_stencil(domain, pt, a, s.order, s.h);

    // d[a][c] = derivative of component c along spatial axis a+1.
    double d[3][3];
    for (int a = 0; a < 3; ++a) {
        for (int c = 0; c < 3; ++c) {
            ScalarMap comp = [&v, c](const SpacetimePoint& q) { return v(q)[c]; };
            d[a][c] = d1(comp, pt, a + 1, s.order, s.h);
        }
    }
    CurlDiv out;
    out.curl = {d[1][2] - d[2][1], d[2][0] - d[0][2], d[0][1] - d[1][0]};
    out.div = d[0][0] + d[1][1] + d[2][2];
    return out;
}

}  // namespace axion
