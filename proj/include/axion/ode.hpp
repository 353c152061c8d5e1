#pragma once

#include <vector>

#include "axion/core.hpp"

namespace axion {

/// First-order system y' = rhs(omega, y).
struct OdeSystem {
    int dim = 0;
    std::function<void(double, const double*, double*)> rhs;
};

struct OdeOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-11;
    double max_node_spacing = 0.005;  // dense-profile knot cap
    double initial_step = 1e-3;
    int max_steps = 2000000;
};

/// Dense solution record: states and their derivatives on an omega grid.
/// Hermite interpolation between knots; `smooth_component` additionally uses
/// the stored derivative chain for kink-free second derivatives where the
/// state is organised as (f, f') pairs.
class DenseProfile {
  public:
    int dim = 0;
    std::vector<double> omega;                // strictly increasing
    std::vector<std::vector<double>> state;   // state[i] at omega[i]
    std::vector<std::vector<double>> deriv;   // rhs at omega[i]
    std::vector<int> pair_of;                 // pair_of[c] = index of c's derivative
                                              // within the state, or -1

    double omega_min() const { return omega.front(); }
    double omega_max() const { return omega.back(); }
    bool covers(double w, double margin = 0.0) const {
        return w >= omega.front() + margin && w <= omega.back() - margin;
    }

    /// Cubic-Hermite interpolation of the full state.
    std::vector<double> interpolate(double w) const;

    /// Single component with quintic Hermite when the component has a stored
    /// derivative chain (value, slope, curvature at both knots).
    double smooth_component(double w, int comp) const;

  private:
    int locate(double w) const;
};

/// Adaptive Dormand-Prince 5(4) from omega0 to omega1 (either direction),
/// recording knots no farther apart than opts.max_node_spacing.
/// The returned profile is stored ascending in omega.
DenseProfile integrate_dense(const OdeSystem& sys, double omega0, double omega1,
                             const std::vector<double>& y0, const OdeOptions& opts = {});

/// End value only.
std::vector<double> integrate_to(const OdeSystem& sys, double omega0, double omega1,
                                 const std::vector<double>& y0, const OdeOptions& opts = {});

}  // namespace axion
