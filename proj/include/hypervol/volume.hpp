#pragma once

#include <array>

#include "hypervol/gram.hpp"

namespace hypervol {

/// Coefficients of the saddle-point quadratic q2 z^2 + q1 z + q0 = 0 and
/// their normalized forms qhat_l = q_l / prod(a_k).
struct QCoefficients {
    Complex q0, q1, q2;
    Complex qhat1, qhat2;
};

/// The two stationary points z-, z+ and the discriminant root
/// delta = -i*sqrt(-det G), so that z_-/+ = (-qhat1 -/+ 4*delta) / (2*qhat2).
struct StationaryPoints {
    Complex z_minus, z_plus;
    Complex delta;
};

/// Full result of the volume computation.
struct VolumeReport {
    double volume = 0;
    Complex V{}, W{};
    double mu = 0;
    double ell = 0;
    std::array<int, 6> branch_integers{};  // n_k with t_k = (pi/2) * n_k
    MetricData metric;
    RegimeDiagnostics diagnostics;
    double mu_cross_check = 0;   // -2 Re(a4 dV/da4) mod pi (NaN when ell = 0)
    double saddle_residual = 0;  // max |exp(z dU/dz) - 1| over z-, z+
    bool nudged = false;         // ideal-edge input evaluated at theta = eps
};

/// Evaluate q0, q1, q2 (and qhat1, qhat2) at arbitrary complex parameters.
QCoefficients compute_q(const std::array<Complex, 6>& a);

/// Stationary points from the normalized quadratic. `det` is det G (must be
/// negative); throws DegenerateError when q2 ~ 0 or det >= 0. `flip_delta`
/// negates the square-root convention (debug aid).
StationaryPoints stationary_points(const std::array<Complex, 6>& a, double det,
                                   bool flip_delta = false);

/// The eight-dilogarithm sum U(a, z).
Complex U(const std::array<Complex, 6>& a, Complex z);

/// z * dU/dz in closed logarithmic form.
Complex z_dU_dz(const std::array<Complex, 6>& a, Complex z);

/// a_k * dU/da_k (k in 1..6) in closed logarithmic form.
Complex ak_dU_dak(const std::array<Complex, 6>& a, Complex z, int k);

/// V = (i/4) [ (U - z dU/dz log z) at z- minus the same at z+ ].
Complex V(const std::array<Complex, 6>& a, const StationaryPoints& sp);

/// a_k dV/da_k = (i/4) [ a_k dU/da_k at z-  minus  at z+ ]  (stationarity
/// kills the dz terms).
Complex ak_dV_dak(const std::array<Complex, 6>& a, const StationaryPoints& sp,
                  int k);

/// Branch-correction term W = sum_k t_k log a_k with t_k = (pi/2) n_k.
/// Returns W and the six integers n_k.
struct WResult {
    Complex value;
    std::array<int, 6> branch_integers;
};
WResult W(const std::array<Complex, 6>& a, const StationaryPoints& sp);

/// Volume of the prism-truncated tetrahedron: Re(-V + W - mu*ell/2).
/// Throws RegimeError / DegenerateError on invalid input.
VolumeReport prism_volume(const PrismTetParams& p, bool flip_delta = false);

} // namespace hypervol
