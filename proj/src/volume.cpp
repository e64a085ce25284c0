#include "hypervol/volume.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hypervol {

namespace {

constexpr double kPi = std::numbers::pi;

// theta_k = 0 makes several dilogarithm arguments collide with the branch
// point at the stationary points; those inputs are evaluated at theta = eps
// instead. The volume error is O(eps^2) empirically.
constexpr double kIdealEdgeEps = 1e-5;
constexpr int kBranchIntegerBound = 8;

// Products appearing in U: the four "+Li2(c z)" terms and the four
// "-Li2(-c z)" terms, as index sets into a[0..5].
constexpr int kPosTerms[4][4] = {{-1, -1, -1, -1},   // plain z
                                 {0, 1, 3, 4},       // a1 a2 a4 a5
                                 {0, 2, 3, 5},       // a1 a3 a4 a6
                                 {1, 2, 4, 5}};      // a2 a3 a5 a6
constexpr int kNegTerms[4][3] = {{0, 1, 2},          // a1 a2 a3
                                 {0, 4, 5},          // a1 a5 a6
                                 {1, 3, 5},          // a2 a4 a6
                                 {2, 3, 4}};         // a3 a4 a5

Complex pos_product(const std::array<Complex, 6>& a, int t) {
    Complex p = 1.0;
    for (int idx : kPosTerms[t])
        if (idx >= 0) p *= a[idx];
    return p;
}

Complex neg_product(const std::array<Complex, 6>& a, int t) {
    Complex p = 1.0;
    for (int idx : kNegTerms[t]) p *= a[idx];
    return p;
}

bool pos_contains(int t, int k) {
    for (int idx : kPosTerms[t])
        if (idx == k) return true;
    return false;
}

bool neg_contains(int t, int k) {
    for (int idx : kNegTerms[t])
        if (idx == k) return true;
    return false;
}

} // namespace

QCoefficients compute_q(const std::array<Complex, 6>& a) {
    const Complex a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4],
                  a6 = a[5];
    QCoefficients q;
    q.q0 = 1.0 + a1 * a2 * a3 + a1 * a5 * a6 + a2 * a4 * a6 + a3 * a4 * a5 +
           a1 * a2 * a4 * a5 + a1 * a3 * a4 * a6 + a2 * a3 * a5 * a6;
    const Complex prod = a1 * a2 * a3 * a4 * a5 * a6;
    q.q1 = -prod * ((a1 - 1.0 / a1) * (a4 - 1.0 / a4) +
                    (a2 - 1.0 / a2) * (a5 - 1.0 / a5) +
                    (a3 - 1.0 / a3) * (a6 - 1.0 / a6));
    q.q2 = prod * (a1 * a4 + a2 * a5 + a3 * a6 + a1 * a2 * a6 + a1 * a3 * a5 +
                   a2 * a3 * a4 + a4 * a5 * a6 + prod);
    q.qhat1 = q.q1 / prod;
    q.qhat2 = q.q2 / prod;
    return q;
}

StationaryPoints stationary_points(const std::array<Complex, 6>& a, double det,
                                   bool flip_delta) {
    if (!(det < 0.0)) {
        throw DegenerateError("stationary_points: det G must be negative");
    }
    QCoefficients q = compute_q(a);
    if (std::abs(q.qhat2) < 1e-12) {
        throw DegenerateError("stationary_points: quadratic collapses (q2 ~ 0)");
    }
    StationaryPoints sp;
    // The sign of the square root is fixed by reproduction of the reference
    // table with positive volume; see the README note on conventions.
    sp.delta = Complex(0.0, -std::sqrt(-det));
    if (flip_delta) sp.delta = -sp.delta;
    sp.z_minus = (-q.qhat1 - 4.0 * sp.delta) / (2.0 * q.qhat2);
    sp.z_plus = (-q.qhat1 + 4.0 * sp.delta) / (2.0 * q.qhat2);
    return sp;
}

Complex U(const std::array<Complex, 6>& a, Complex z) {
    Complex s = 0.0;
    for (int t = 0; t < 4; ++t) s += dilog(pos_product(a, t) * z);
    for (int t = 0; t < 4; ++t) s -= dilog(-neg_product(a, t) * z);
    return s;
}

Complex z_dU_dz(const std::array<Complex, 6>& a, Complex z) {
    Complex s = 0.0;
    for (int t = 0; t < 4; ++t) {
        Complex w = 1.0 - pos_product(a, t) * z;
        if (w == Complex(0.0)) throw DegenerateError("z_dU_dz: log singularity");
        s -= principal_log(w);
    }
    for (int t = 0; t < 4; ++t) {
        Complex w = 1.0 + neg_product(a, t) * z;
        if (w == Complex(0.0)) throw DegenerateError("z_dU_dz: log singularity");
        s += principal_log(w);
    }
    return s;
}

Complex ak_dU_dak(const std::array<Complex, 6>& a, Complex z, int k) {
    Complex s = 0.0;
    for (int t = 0; t < 4; ++t) {
        if (!pos_contains(t, k - 1)) continue;
        Complex w = 1.0 - pos_product(a, t) * z;
        if (w == Complex(0.0)) throw DegenerateError("ak_dU_dak: log singularity");
        s -= principal_log(w);
    }
    for (int t = 0; t < 4; ++t) {
        if (!neg_contains(t, k - 1)) continue;
        Complex w = 1.0 + neg_product(a, t) * z;
        if (w == Complex(0.0)) throw DegenerateError("ak_dU_dak: log singularity");
        s += principal_log(w);
    }
    return s;
}

Complex V(const std::array<Complex, 6>& a, const StationaryPoints& sp) {
    auto f = [&](Complex z) {
        return U(a, z) - z_dU_dz(a, z) * principal_log(z);
    };
    return Complex(0.0, 0.25) * (f(sp.z_minus) - f(sp.z_plus));
}

Complex ak_dV_dak(const std::array<Complex, 6>& a, const StationaryPoints& sp,
                  int k) {
    return Complex(0.0, 0.25) *
           (ak_dU_dak(a, sp.z_minus, k) - ak_dU_dak(a, sp.z_plus, k));
}

WResult W(const std::array<Complex, 6>& a, const StationaryPoints& sp) {
    WResult r{};
    r.value = 0.0;
    for (int k = 1; k <= 6; ++k) {
        Complex x = ak_dV_dak(a, sp, k);
        // t_k = x - (i/4) Log(e^{-4ix}) collapses to (pi/2) * n_k with n_k the
        // integer unwinding the principal logarithm.
        Complex t = x - Complex(0.0, 0.25) *
                            principal_log(std::exp(Complex(0.0, -4.0) * x));
        int n = static_cast<int>(std::lround(t.real() / (kPi / 2.0)));
        if (std::abs(n) > kBranchIntegerBound) {
            throw DegenerateError("W: branch integer out of sanity bound");
        }
        r.branch_integers[k - 1] = n;
        r.value += t * principal_log(a[k - 1]);
    }
    return r;
}

VolumeReport prism_volume(const PrismTetParams& p, bool flip_delta) {
    p.validate();
    GramMatrix g = build_gram(p);
    RegimeDiagnostics diag = validate_prism_regime(g);
    if (!diag.pass) throw RegimeError(diag);

    VolumeReport rep;
    rep.diagnostics = diag;
    rep.metric = metric_data(g);
    rep.mu = rep.metric.mu;
    rep.ell = p.ell;

    // Ideal edges (theta = 0) put stationary points on the dilogarithm branch
    // point; evaluate V and W at a nudged angle instead.
    PrismTetParams pe = p;
    for (double& t : pe.theta) {
        if (t < 1e-12) {
            t = kIdealEdgeEps;
            rep.nudged = true;
        }
    }
    GramMatrix ge = rep.nudged ? build_gram(pe) : g;
    EdgeParameters a = to_edge_parameters(pe);

    StationaryPoints sp = stationary_points(a.a, ge.det, flip_delta);
    rep.V = V(a.a, sp);
    WResult w = W(a.a, sp);

    double r1 = std::abs(std::exp(z_dU_dz(a.a, sp.z_minus)) - 1.0);
    double r2 = std::abs(std::exp(z_dU_dz(a.a, sp.z_plus)) - 1.0);
    rep.saddle_residual = std::max(r1, r2);

    // Independent route to mu: the altitude derivative of V reproduces the
    // cofactor dual angle mod pi. Degenerates at ell = 0, where the altitude
    // shrinks away.
    const Complex x4 = ak_dV_dak(a.a, sp, 4);
    if (p.ell > 0.0) {
        double mt = std::fmod(-2.0 * x4.real(), kPi);
        if (mt < 0.0) mt += kPi;
        rep.mu_cross_check = mt;
        if (std::abs(mt - rep.mu) > 1e-6) {
            throw DegenerateError("prism_volume: mu cross-check disagrees");
        }
    } else {
        rep.mu_cross_check = std::numeric_limits<double>::quiet_NaN();
    }

    // The quarter-turn count for the altitude parameter must track the dual
    // angle, not the principal stratum: Re(x4) + mu/2 is an exact multiple of
    // pi/2, and quantizing Re(x4) alone makes the assembled volume jump by
    // (pi/2) ell when mu crosses pi/2. Only this term has a real logarithm
    // (log a4 = ell), so the other branch integers are unaffected.
    const int n4 = p.ell > 0.0
                       ? static_cast<int>(std::lround((x4.real() + rep.mu / 2.0) /
                                                      (kPi / 2.0)))
                       : w.branch_integers[3];
    if (std::abs(n4) > kBranchIntegerBound) {
        throw DegenerateError("prism_volume: branch integer out of sanity bound");
    }
    if (n4 != w.branch_integers[3]) {
        w.value += static_cast<double>(n4 - w.branch_integers[3]) *
                   (kPi / 2.0) * principal_log(a.a[3]);
        w.branch_integers[3] = n4;
    }
    rep.W = w.value;
    rep.branch_integers = w.branch_integers;

    rep.volume = (-rep.V + rep.W).real() - rep.mu * p.ell / 2.0;
    if (rep.volume < -1e-9) {
        throw DegenerateError("prism_volume: negative volume");
    }
    return rep;
}

} // namespace hypervol
