#include "axion/ode.hpp"

#include <algorithm>
#include <cmath>

namespace axion {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

struct Stepper {
    const OdeSystem& sys;
    std::vector<double> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;

    explicit Stepper(const OdeSystem& s)
        : sys(s), k1(s.dim), k2(s.dim), k3(s.dim), k4(s.dim), k5(s.dim), k6(s.dim), k7(s.dim),
          ytmp(s.dim), ynew(s.dim), yerr(s.dim) {}

    // One trial step from (w, y) with k1 already evaluated. Returns the scaled
    // error norm; fills ynew, k7 (= rhs at the new point, FSAL).
    double attempt(double w, const std::vector<double>& y, double h, const OdeOptions& o) {
        const int n = sys.dim;
        for (int i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        sys.rhs(w + h / 5.0, ytmp.data(), k2.data());
        for (int i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        sys.rhs(w + 3.0 * h / 10.0, ytmp.data(), k3.data());
        for (int i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        sys.rhs(w + 4.0 * h / 5.0, ytmp.data(), k4.data());
        for (int i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        sys.rhs(w + 8.0 * h / 9.0, ytmp.data(), k5.data());
        for (int i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        sys.rhs(w + h, ytmp.data(), k6.data());
        for (int i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        sys.rhs(w + h, ynew.data(), k7.data());
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = o.abs_tol + o.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double q = yerr[i] / sc;
            err += q * q;
        }
        return std::sqrt(err / n);
    }
};

}  // namespace

int DenseProfile::locate(double w) const {
    if (omega.empty()) throw ProfileRangeExceeded("empty profile");
    if (w < omega.front() - 1e-12 || w > omega.back() + 1e-12)
        throw ProfileRangeExceeded("omega outside the integrated range");
    auto it = std::upper_bound(omega.begin(), omega.end(), w);
    int idx = static_cast<int>(it - omega.begin()) - 1;
    return std::clamp(idx, 0, static_cast<int>(omega.size()) - 2);
}

std::vector<double> DenseProfile::interpolate(double w) const {
    const int i = locate(w);
    const double h = omega[i + 1] - omega[i];
    const double t = (w - omega[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    std::vector<double> out(dim);
    for (int c = 0; c < dim; ++c) {
        out[c] = h00 * state[i][c] + h * h10 * deriv[i][c] + h01 * state[i + 1][c] +
                 h * h11 * deriv[i + 1][c];
    }
    return out;
}

double DenseProfile::smooth_component(double w, int comp) const {
    const int i = locate(w);
    const double h = omega[i + 1] - omega[i];
    const double t = (w - omega[i]) / h;
    const int pc = (comp < static_cast<int>(pair_of.size())) ? pair_of[comp] : -1;
    if (pc < 0) {
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * state[i][comp] + h * (t3 - 2 * t2 + t) * deriv[i][comp] +
               (-2 * t3 + 3 * t2) * state[i + 1][comp] + h * (t3 - t2) * deriv[i + 1][comp];
    }
    // Quintic Hermite from (value, slope, curvature) at both knots.
    const double f0 = state[i][comp], f1 = state[i + 1][comp];
    const double d0 = h * state[i][pc], d1 = h * state[i + 1][pc];
    const double c0 = h * h * deriv[i][pc], c1 = h * h * deriv[i + 1][pc];
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double H0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    const double H1 = t - 6 * t3 + 8 * t4 - 3 * t5;
    const double H2 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
    const double H3 = 0.5 * (t3 - 2 * t4 + t5);
    const double H4 = -4 * t3 + 7 * t4 - 3 * t5;
    const double H5 = 10 * t3 - 15 * t4 + 6 * t5;
    return H0 * f0 + H1 * d0 + H2 * c0 + H3 * c1 + H4 * d1 + H5 * f1;
}

DenseProfile integrate_dense(const OdeSystem& sys, double omega0, double omega1,
                             const std::vector<double>& y0, const OdeOptions& opts) {
    if (static_cast<int>(y0.size()) != sys.dim)
        throw RangeError("initial state dimension mismatch");
    DenseProfile prof;
    prof.dim = sys.dim;

    const double span = omega1 - omega0;
    const double dir = (span >= 0.0) ? 1.0 : -1.0;
    const double total = std::abs(span);

    Stepper st(sys);
    std::vector<double> y = y0;
    double w = omega0;
    sys.rhs(w, y.data(), st.k1.data());
    for (double v : st.k1)
        if (!std::isfinite(v)) throw SingularEncounter("rhs not finite at the initial point");

    prof.omega.push_back(w);
    prof.state.push_back(y);
    prof.deriv.push_back(st.k1);

    if (total == 0.0) return prof;

    double h = dir * std::min({opts.initial_step, opts.max_node_spacing, total});
    int steps = 0;
    while (dir * (omega1 - w) > 1e-15 * (1.0 + std::abs(omega1))) {
        if (++steps > opts.max_steps) throw StepUnderflow("step budget exhausted");
        if (std::abs(h) > dir * (omega1 - w)) h = omega1 - w;
        const double err = st.attempt(w, y, h, opts);
        bool finite = true;
        for (double v : st.ynew)
            if (!std::isfinite(v)) finite = false;
        if (finite && err <= 1.0) {
            w += h;
            y = st.ynew;
            st.k1 = st.k7;
            prof.omega.push_back(w);
            prof.state.push_back(y);
            prof.deriv.push_back(st.k1);
            double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            const double shrink = finite ? std::max(0.9 * std::pow(err, -0.2), 0.1) : 0.1;
            h *= shrink;
        }
        if (std::abs(h) > opts.max_node_spacing) h = dir * opts.max_node_spacing;
        if (std::abs(h) < 1e-14 * (1.0 + std::abs(w)))
            throw StepUnderflow("step size underflow");
    }

    if (dir < 0) {
        std::reverse(prof.omega.begin(), prof.omega.end());
        std::reverse(prof.state.begin(), prof.state.end());
        std::reverse(prof.deriv.begin(), prof.deriv.end());
    }
    return prof;
}

std::vector<double> integrate_to(const OdeSystem& sys, double omega0, double omega1,
                                 const std::vector<double>& y0, const OdeOptions& opts) {
    OdeOptions o = opts;
    o.max_node_spacing = std::max(1e-3, std::abs(omega1 - omega0));  // no dense recording needed
    DenseProfile prof = integrate_dense(sys, omega0, omega1, y0, o);
    return (omega1 >= omega0) ? prof.state.back() : prof.state.front();
}

}  // namespace axion
