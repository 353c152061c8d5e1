#pragma once

// Implementation-independent oracles used by the test suites: quadrature
// representations of the special functions, brute-force tensor contractions,
// and small root-finding helpers. Nothing here calls into the library paths
// it is used to check.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

constexpr double kPi = 3.14159265358979323846;

/// J_n(x) for integer n >= 0 via the trapezoid rule on
/// (1/pi) Int_0^pi cos(n t - x sin t) dt (superconvergent for this integrand).
inline double bessel_j_int(int n, double x, int panels = 512) {
    const double h = kPi / panels;
    double sum = 0.5 * (std::cos(0.0) + std::cos(n * kPi - x * std::sin(kPi)));
    for (int k = 1; k < panels; ++k) {
        const double t = k * h;
        sum += std::cos(n * t - x * std::sin(t));
    }
    return sum * h / kPi;
}

/// K_nu(x) = Int_0^inf exp(-x cosh t) cosh(nu t) dt by Simpson on [0, T].
inline double bessel_k_quad(double nu, double x, double T = 12.0, int panels = 4000) {
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    const double h = T / panels;
    double sum = f(0.0) + f(T);
    for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(k * h);
    return sum * h / 3.0;
}

/// I_nu(x) = (1/pi) Int_0^pi e^{x cos t} cos(nu t) dt
///           - sin(nu pi)/pi Int_0^inf e^{-x cosh t - nu t} dt.
inline double bessel_i_quad(double nu, double x, int panels = 4000) {
    auto f1 = [&](double t) { return std::exp(x * std::cos(t)) * std::cos(nu * t); };
    const double h1 = kPi / panels;
    double s1 = f1(0.0) + f1(kPi);
    for (int k = 1; k < panels; ++k) s1 += (k % 2 ? 4.0 : 2.0) * f1(k * h1);
    s1 = s1 * h1 / 3.0 / kPi;
    auto f2 = [&](double t) { return std::exp(-x * std::cosh(t) - nu * t); };
    const double T = 40.0;
    const double h2 = T / panels;
    double s2 = f2(0.0) + f2(T);
    for (int k = 1; k < panels; ++k) s2 += (k % 2 ? 4.0 : 2.0) * f2(k * h2);
    s2 = s2 * h2 / 3.0;
    return s1 - std::sin(nu * kPi) / kPi * s2;
}

/// Ai(x) by rotating the oscillatory Airy integral onto the ray
/// t = s exp(i pi/6), where it decays like exp(-s^3/3):
///   Ai(x) = (1/pi) Re[ e^{i pi/6} Int_0^inf e^{-s^3/3 - x s/2} e^{i sqrt3 x s / 2} ds ].
inline double airy_ai_quad(double x, double S = 14.0, int panels = 6000) {
    const std::complex<double> rot = std::polar(1.0, kPi / 6.0);
    auto f = [&](double s) {
        const double mag = std::exp(-s * s * s / 3.0 - 0.5 * x * s);
        const double phase = 0.5 * std::sqrt(3.0) * x * s;
        return rot * mag * std::complex<double>(std::cos(phase), std::sin(phase));
    };
    const double h = S / panels;
    std::complex<double> sum = f(0.0) + f(S);
    for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(k * h);
    sum *= h / 3.0;
    return sum.real() / kPi;
}

/// Bisection for a sign change of f on [a, b].
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-14) {
    double fa = f(a);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

/// Newton iteration for w e^w = y (independent check of the Lambert W path).
inline double lambert_newton(double y) {
    double w = (y > 1.0) ? std::log(y) : y;
    for (int it = 0; it < 200; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - y;
        const double step = f / (ew * (w + 1.0));
        w -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Brute-force field-tensor contractions (index sums, no shortcuts)
// ---------------------------------------------------------------------------

struct TensorSums {
    double FF;      // F_{mu nu} F^{mu nu}
    double FFdual;  // F_{mu nu} Fdual^{mu nu}
};

/// Assemble F^{mu nu} from E^a = F^{0a}, F^{ab} = -eps_{abc} B^c, lower the
/// indices with eta = diag(1,-1,-1,-1), and contract by explicit summation.
inline TensorSums contract_field_tensor(const std::array<double, 3>& E,
                                        const std::array<double, 3>& B) {
    double Fup[4][4] = {};
    for (int a = 0; a < 3; ++a) {
        Fup[0][a + 1] = E[a];
        Fup[a + 1][0] = -E[a];
    }
    auto eps3 = [](int a, int b, int c) -> double {
        if (a == b || b == c || a == c) return 0.0;
        if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) ||
            (a == 2 && b == 0 && c == 1))
            return 1.0;
        return -1.0;
    };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double v = 0.0;
            for (int c = 0; c < 3; ++c) v -= eps3(a, b, c) * B[c];
            Fup[a + 1][b + 1] = v;
        }

    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    double Fdn[4][4];
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) Fdn[m][n] = eta[m] * eta[n] * Fup[m][n];

    // 4D Levi-Civita with eps^{0123} = +1 by permutation sign.
    auto eps4 = [](int a, int b, int c, int d) -> double {
        int p[4] = {a, b, c, d};
        double sign = 1.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (p[i] == p[j]) return 0.0;
                if (p[i] > p[j]) sign = -sign;
            }
        return sign;
    };

    TensorSums out{0.0, 0.0};
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) out.FF += Fdn[m][n] * Fup[m][n];

    double Fdualup[4][4] = {};
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            double v = 0.0;
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) v += 0.5 * eps4(m, n, r, s) * Fdn[r][s];
            Fdualup[m][n] = v;
        }
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) out.FFdual += Fdn[m][n] * Fdualup[m][n];
    return out;
}

}  // namespace oracles
