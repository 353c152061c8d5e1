#pragma once

#include "axion/core.hpp"

namespace axion::sf {

/// Convergence budget for series/continued-fraction evaluation.
struct SeriesBudget {
    int max_terms = 10000;
    double abs_floor = 1e-300;
    double rel_tol = 1e-15;
};

/// Cylinder functions of real order, supported on the catalog range
/// nu in [0, 5], x in (0, 50]. Relative accuracy ~1e-12 away from zeros.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

struct CylinderPair {
    double j, y, jp, yp;  // J, Y and their x-derivatives
};
struct ModifiedPair {
    double i, k, ip, kp;
};
CylinderPair bessel_jy(double nu, double x, const SeriesBudget& budget = {});
ModifiedPair bessel_ik(double nu, double x, const SeriesBudget& budget = {});

/// Airy functions on |x| <= 15.
double airy_ai(double x);
double airy_bi(double x);
double airy_ai_deriv(double x);
double airy_bi_deriv(double x);

/// Principal-branch Lambert W: W(y) e^{W(y)} = y, for y >= -1/e + 1e-12.
double lambert_w(double y);

}  // namespace axion::sf
