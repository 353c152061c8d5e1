#include "axion/special_functions.hpp"

#include <cmath>

namespace axion::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFpMin = 1e-300;

void check_cyl_range(double nu, double x) {
    if (!(nu >= 0.0 && nu <= 5.0))
        throw OutOfSupportedRange("cylinder-function order outside [0, 5]");
    if (!(x > 0.0 && x <= 50.0))
        throw OutOfSupportedRange("cylinder-function argument outside (0, 50]");
}

/// Reciprocal-gamma combinations for |mu| <= 1/2:
///   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
///   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
void gamma_combos(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    gampl = 1.0 / std::tgamma(1.0 + mu);
    gammi = 1.0 / std::tgamma(1.0 - mu);
    gam2 = 0.5 * (gammi + gampl);
    if (std::abs(mu) < 1e-6) {
        // 1/Gamma(1+z) = 1 + g1 z + g2 z^2 + g3 z^3 + ..., odd part over z
        const double euler = 0.57721566490153286061;
        const double g3 = euler * euler * euler / 6.0 -
                          euler * kPi * kPi / 12.0 + 0.40068563438653142847;  // zeta(3)/3
        gam1 = -(euler + g3 * mu * mu);
    } else {
        gam1 = (gammi - gampl) / (2.0 * mu);
    }
}

}  // namespace

CylinderPair bessel_jy(double nu, double x, const SeriesBudget& budget) {
    check_cyl_range(nu, x);
    const double eps = budget.rel_tol;
    const int maxit = budget.max_terms;
    const double xmin_series = 2.0;

    const int nl = (x < xmin_series) ? static_cast<int>(nu + 0.5)
                                     : std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / kPi;

    // CF1 for J'/J at order nu.
    int isign = 1;
    double h = nu * xi;
    if (h < kFpMin) h = kFpMin;
    double b = xi2 * nu;
    double d = 0.0, c = h;
    int i = 1;
    for (; i <= maxit; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = b - 1.0 / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = c * d;
        h = del * h;
        if (d < 0.0) isign = -isign;
        if (std::abs(del - 1.0) < eps) break;
    }
    if (i > maxit) throw OutOfSupportedRange("CF1 failed to converge");

    double rjl = isign * kFpMin;
    double rjpl = h * rjl;
    const double rjl1 = rjl, rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) rjl = eps;
    const double f = rjpl / rjl;  // J'_mu / J_mu

    double rjmu, rymu, rymup, ry1;
    if (x < xmin_series) {
        // Temme's series for Y_mu, Y_{mu+1}.
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        double fct = (std::abs(pimu) < eps) ? 1.0 : pimu / std::sin(pimu);
        double dlog = -std::log(x2);
        double e = xmu * dlog;
        const double fact2 = (std::abs(e) < eps) ? 1.0 : std::sinh(e) / e;
        double gam1, gam2, gampl, gammi;
        gamma_combos(xmu, gam1, gam2, gampl, gammi);
        double ff = 2.0 / kPi * fct * (gam1 * std::cosh(e) + gam2 * fact2 * dlog);
        e = std::exp(e);
        double p = e / (gampl * kPi);
        double q = 1.0 / (e * kPi * gammi);
        const double pimu2 = 0.5 * pimu;
        const double fact3 = (std::abs(pimu2) < eps) ? 1.0 : std::sin(pimu2) / pimu2;
        const double r = kPi * pimu2 * fact3 * fact3;
        double cc = 1.0;
        const double dd = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        int k = 1;
        for (; k <= maxit; ++k) {
            ff = (k * ff + p + q) / (k * k - xmu2);
            cc *= dd / k;
            p /= (k - xmu);
            q /= (k + xmu);
            const double del = cc * (ff + r * q);
            sum += del;
            const double del1 = cc * p - k * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * eps) break;
        }
        if (k > maxit) throw OutOfSupportedRange("Temme Y series failed to converge");
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // Steed's CF2 for (J' + iY')/(J + iY) at order mu.
        const double a = 0.25 - xmu2;
        double p = -0.5 * xi;
        double q = 1.0;
        double br = 2.0 * x;
        double bi = 2.0;
        double fct = a * xi / (p * p + q * q);
        double cr = br + q * fct;
        double ci = bi + p * fct;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        double aa = a;
        int k = 2;
        for (; k <= maxit; ++k) {
            aa += 2 * (k - 1);
            bi += 2.0;
            dr = aa * dr + br;
            di = aa * di + bi;
            if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
            fct = aa / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
            den = dr * dr + di * di;
            dr = dr / den;
            di = -di / den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) < eps) break;
        }
        if (k > maxit) throw OutOfSupportedRange("CF2 failed to converge");
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    const double scale = rjmu / rjl;
    CylinderPair out;
    out.j = rjl1 * scale;
    out.jp = rjp1 * scale;
    for (int l = 1; l <= nl; ++l) {
        const double rytemp = (xmu + l) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    out.y = rymu;
    out.yp = nu * xi * rymu - ry1;
    return out;
}

ModifiedPair bessel_ik(double nu, double x, const SeriesBudget& budget) {
    check_cyl_range(nu, x);
    const double eps = budget.rel_tol;
    const int maxit = budget.max_terms;
    const double xmin_series = 2.0;

    const int nl = static_cast<int>(nu + 0.5);
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    // CF1 for I'/I.
    double h = nu * xi;
    if (h < kFpMin) h = kFpMin;
    double b = xi2 * nu;
    double d = 0.0, c = h;
    int i = 1;
    for (; i <= maxit; ++i) {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    if (i > maxit) throw OutOfSupportedRange("CF1 failed to converge");

    double ril = kFpMin;
    double ripl = h * ril;
    const double ril1 = ril, rip1 = ripl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    const double f = ripl / ril;

    double rkmu, rk1;
    if (x < xmin_series) {
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        const double fct = (std::abs(pimu) < eps) ? 1.0 : pimu / std::sin(pimu);
        const double dlog = -std::log(x2);
        double e = xmu * dlog;
        const double fact2 = (std::abs(e) < eps) ? 1.0 : std::sinh(e) / e;
        double gam1, gam2, gampl, gammi;
        gamma_combos(xmu, gam1, gam2, gampl, gammi);
        double ff = fct * (gam1 * std::cosh(e) + gam2 * fact2 * dlog);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / gampl;
        double q = 0.5 / (e * gammi);
        double cc = 1.0;
        const double dd = x2 * x2;
        double sum1 = p;
        int k = 1;
        for (; k <= maxit; ++k) {
            ff = (k * ff + p + q) / (k * k - xmu2);
            cc *= dd / k;
            p /= (k - xmu);
            q /= (k + xmu);
            const double del = cc * ff;
            sum += del;
            const double del1 = cc * (p - k * ff);
            sum1 += del1;
            if (std::abs(del) < std::abs(sum) * eps) break;
        }
        if (k > maxit) throw OutOfSupportedRange("Temme K series failed to converge");
        rkmu = sum;
        rk1 = sum1 * xi2;
    } else {
        // Thompson-Barnett CF2 for K.
        double bb = 2.0 * (1.0 + x);
        double dd = 1.0 / bb;
        double hh = dd, delh = dd;
        double q1 = 0.0, q2 = 1.0;
        const double a1 = 0.25 - xmu2;
        double q = a1, cc = a1, a = -a1;
        double s = 1.0 + q * delh;
        int k = 2;
        for (; k <= maxit; ++k) {
            a -= 2 * (k - 1);
            cc = -a * cc / k;
            const double qnew = (q1 - bb * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += cc * qnew;
            bb += 2.0;
            dd = 1.0 / (bb + a * dd);
            delh = (bb * dd - 1.0) * delh;
            hh += delh;
            const double dels = q * delh;
            s += dels;
            if (std::abs(dels / s) < eps) break;
        }
        if (k > maxit) throw OutOfSupportedRange("CF2 failed to converge");
        hh = a1 * hh;
        rkmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
        rk1 = rkmu * (xmu + x + 0.5 - hh) * xi;
    }

    const double rkmup = xmu * xi * rkmu - rk1;
    const double rimu = xi / (f * rkmu - rkmup);
    ModifiedPair out;
    out.i = (rimu * ril1) / ril;
    out.ip = (rimu * rip1) / ril;
    for (int l = 1; l <= nl; ++l) {
        const double rktemp = (xmu + l) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    out.k = rkmu;
    out.kp = nu * xi * rkmu - rk1;
    return out;
}

double bessel_j(double nu, double x) { return bessel_jy(nu, x).j; }
double bessel_y(double nu, double x) { return bessel_jy(nu, x).y; }
double bessel_i(double nu, double x) { return bessel_ik(nu, x).i; }
double bessel_k(double nu, double x) { return bessel_ik(nu, x).k; }

namespace {

constexpr double kAiryAi0 = 0.35502805388781723926;    // Ai(0)
constexpr double kAiryBi0 = 0.61492662744600073515;    // Bi(0)
constexpr double kAiryAip0 = -0.25881940379280679840;  // Ai'(0)
constexpr double kAiryBip0 = 0.44828835735382635789;   // Bi'(0)
constexpr double kOneOverSqrt3 = 0.57735026918962576451;

void check_airy_range(double x) {
    if (!(std::abs(x) <= 15.0)) throw OutOfSupportedRange("Airy argument outside |x| <= 15");
}

struct AiryAll {
    double ai, bi, aip, bip;
};

AiryAll airy_all(double x) {
    check_airy_range(x);
    AiryAll out;
    const double ax = std::abs(x);
    if (ax < 1e-8) {
        out.ai = kAiryAi0 + kAiryAip0 * x;
        out.bi = kAiryBi0 + kAiryBip0 * x;
        out.aip = kAiryAip0;
        out.bip = kAiryBip0;
        return out;
    }
    const double rootx = std::sqrt(ax);
    const double z = 2.0 * ax * rootx / 3.0;
    if (x > 0.0) {
        const ModifiedPair third = bessel_ik(1.0 / 3.0, z);
        out.ai = rootx * kOneOverSqrt3 * third.k / kPi;
        out.bi = rootx * (third.k / kPi + 2.0 * kOneOverSqrt3 * third.i);
        const ModifiedPair twothird = bessel_ik(2.0 / 3.0, z);
        out.aip = -x * kOneOverSqrt3 * twothird.k / kPi;
        out.bip = x * (twothird.k / kPi + 2.0 * kOneOverSqrt3 * twothird.i);
    } else {
        const CylinderPair third = bessel_jy(1.0 / 3.0, z);
        out.ai = 0.5 * rootx * (third.j - kOneOverSqrt3 * third.y);
        out.bi = -0.5 * rootx * (third.y + kOneOverSqrt3 * third.j);
        const CylinderPair twothird = bessel_jy(2.0 / 3.0, z);
        out.aip = 0.5 * ax * (kOneOverSqrt3 * twothird.y + twothird.j);
        out.bip = 0.5 * ax * (kOneOverSqrt3 * twothird.j - twothird.y);
    }
    return out;
}

}  // namespace

double airy_ai(double x) { return airy_all(x).ai; }
double airy_bi(double x) { return airy_all(x).bi; }
double airy_ai_deriv(double x) { return airy_all(x).aip; }
double airy_bi_deriv(double x) { return airy_all(x).bip; }

double lambert_w(double y) {
    const double branch = -std::exp(-1.0);
    if (y < branch + 1e-12) throw BelowBranchPoint("argument below -1/e + 1e-12");
    if (y == 0.0) return 0.0;

    double w;
    if (y < -0.25) {
        const double p = std::sqrt(2.0 * (std::exp(1.0) * y + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p - 43.0 / 540.0 * p * p * p * p;
    } else if (y < 3.0) {
        w = y / (1.0 + y);  // crude; Newton finishes the job
        if (y > 0.5) w = std::log(1.0 + y) * (1.0 - std::log(1.0 + std::log(1.0 + y)) / (2.0 + std::log(1.0 + y)));
    } else {
        const double l1 = std::log(y);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int it = 0; it < 80; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - y;
        const double fp = ew * (w + 1.0);
        if (fp == 0.0) break;
        double step = f / fp;
        // Halley correction, guarded near the branch point
        const double denom = 1.0 - (w + 2.0) * f / (2.0 * (w + 1.0) * fp);
        if (std::abs(w + 1.0) > 1e-4 && std::abs(denom) > 0.5) step /= denom;
        w -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace axion::sf
