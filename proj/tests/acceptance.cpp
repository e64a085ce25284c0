// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier than the unit suite (Monte-Carlo runs use 1e7 samples).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "hypervol/identities.hpp"
#include "hypervol/oracle.hpp"
#include "hypervol/reference_table.hpp"
#include "hypervol/volume.hpp"
#include "sampling.hpp"

using namespace hypervol;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int criterion, const char* what, bool ok, double worst) {
    std::printf("criterion %d: %-52s %s  (worst %.3e)\n", criterion, what,
                ok ? "pass" : "FAIL", worst);
    if (!ok) ++g_failures;
}

std::array<Complex, 6> random_complex_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::array<Complex, 6> a;
    for (auto& x : a) {
        do {
            x = Complex(u(rng), u(rng));
        } while (std::abs(x) < 0.2);
    }
    return a;
}

Complex dilog_series(Complex z) {
    Complex s = 0.0, c = 0.0, p = 1.0;
    for (int n = 1; n <= 1000000; ++n) {
        p *= z;
        Complex term = p / static_cast<double>(n) / static_cast<double>(n);
        Complex y = term - c;
        Complex t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

void criterion1_regression_table() {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    double worst = 0.0;
    bool ok = true;
    for (const ReferenceRow& row : kReferenceTable) {
        VolumeReport r = prism_volume(row.params);
        worst = std::max(worst, std::abs(r.volume - row.volume));
        if (row.params.ell > 0 && std::abs(r.mu - row.mu) > 1e-6) ok = false;
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    ok = ok && worst <= 1e-6 && secs < 1.0;
    report(1, "regression table (12 rows, volume and mu)", ok, worst);
}

void criterion2_monte_carlo() {
    const int rows[] = {1, 6, 7};  // indexes of rows 2, 7, 8
    double worst = 0.0;
    bool ok = true;
    for (int i : rows) {
        const ReferenceRow& row = kReferenceTable[i];
        VolumeReport formula = prism_volume(row.params);
        Realization r = realize(build_gram(row.params));
        MonteCarloEstimate est =
            monte_carlo_volume(build_klein_polytope(r), 10000000, 2024);
        double sig = std::abs(est.value - formula.volume) / est.std_error;
        worst = std::max(worst, sig);
        if (sig > 3.0) ok = false;
        if (i == 6) {
            double sig7 = std::abs(est.value - 0.9159659) / est.std_error;
            worst = std::max(worst, sig7);
            if (sig7 > 3.0) ok = false;
        }
    }
    report(2, "Monte-Carlo agreement (rows 2, 7, 8; 1e7 samples, sigma)", ok,
           worst);
}

void criterion3_derivatives() {
    // Chain-rule form at fixed ell: dVol/dtheta_k + (ell/2) dmu/dtheta_k
    // = -l_k/2, and dVol/dell = -(ell/2) dmu/dell.
    std::mt19937_64 rng(31);
    const double h = 1e-5;
    double worst = 0.0;
    int done = 0;
    while (done < 50) {
        PrismTetParams p = sample_valid_params(rng);
        MetricData m = metric_data(build_gram(p));
        const double lengths[5] = {m.l1, m.l2, m.l3, m.l5, m.l6};
        bool usable = true;
        for (int k = 0; k < 5 && usable; ++k) {
            PrismTetParams pp = p, pm = p;
            pp.theta[k] += h;
            pm.theta[k] -= h;
            VolumeReport rp, rm;
            try {
                rp = prism_volume(pp);
                rm = prism_volume(pm);
            } catch (const std::exception&) {
                usable = false;
                break;
            }
            double dvol = (rp.volume - rm.volume) / (2.0 * h);
            double dmu = (rp.mu - rm.mu) / (2.0 * h);
            double resid = dvol + (p.ell / 2.0) * dmu + lengths[k] / 2.0;
            worst = std::max(worst, std::abs(resid));
        }
        if (!usable) continue;
        PrismTetParams pp = p, pm = p;
        pp.ell += h;
        pm.ell -= h;
        try {
            VolumeReport rp = prism_volume(pp);
            VolumeReport rm = prism_volume(pm);
            double dvol = (rp.volume - rm.volume) / (2.0 * h);
            double dmu = (rp.mu - rm.mu) / (2.0 * h);
            worst = std::max(worst,
                             std::abs(dvol + (p.ell / 2.0) * dmu));
        } catch (const std::exception&) {
            continue;
        }
        ++done;
    }
    report(3, "volume derivative suite (50 valid points)", worst < 1e-5,
           worst);
}

void criterion4_saddle_discriminant() {
    std::mt19937_64 rng(41);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        auto a = random_complex_params(rng);
        QCoefficients q = compute_q(a);
        Complex det = detail::det4(build_complex_gram(a));
        Complex prod = 1.0;
        for (const auto& x : a) prod *= x;
        Complex lhs = q.q1 * q.q1 - 4.0 * q.q0 * q.q2;
        Complex rhs = 16.0 * det * prod * prod;
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    std::mt19937_64 rng2(43);
    for (int t = 0; t < 200; ++t) {
        PrismTetParams p = sample_valid_params(rng2);
        EdgeParameters e = to_edge_parameters(p);
        GramMatrix g = build_gram(p);
        StationaryPoints sp = stationary_points(e.a, g.det);
        worst = std::max(worst,
                         std::abs(std::exp(z_dU_dz(e.a, sp.z_minus)) - 1.0));
        worst = std::max(worst,
                         std::abs(std::exp(z_dU_dz(e.a, sp.z_plus)) - 1.0));
    }
    report(4, "saddle and discriminant identities (1000 draws)", worst < 1e-10,
           worst);
}

void criterion5_factorization() {
    std::mt19937_64 rng(53);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        auto a = random_complex_params(rng);
        for (int c = 1; c <= 3; ++c)
            worst = std::max(worst, E_residual(a, c));
    }
    bool ok = worst < 1e-8;
    double worst_y = 0.0;
    for (int t = 0; t < 100; ++t) {
        auto a = random_complex_params(rng);
        a[0] = a[5] = Complex(0.0);
        Complex expect =
            a[1] * a[1] * a[1] * a[2] * a[3] * a[4] * (a[2] * a[3] + a[4]);
        worst_y = std::max(worst_y, std::abs(Y_polynomial(a) - expect) /
                                        std::max(1.0, std::abs(expect)));
    }
    std::array<Complex, 6> ones;
    ones.fill(Complex(1.0));
    worst_y = std::max(worst_y, std::abs(Y_polynomial(ones) - Complex(64.0)));
    ok = ok && worst_y < 1e-12;
    report(5, "factorization identities and polynomial specializations", ok,
           std::max(worst, worst_y));
}

void criterion6_branch_integrality() {
    std::mt19937_64 rng(61);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        PrismTetParams p = sample_valid_params(rng);
        EdgeParameters e = to_edge_parameters(p);
        GramMatrix g = build_gram(p);
        StationaryPoints sp = stationary_points(e.a, g.det);
        WResult w = W(e.a, sp);
        for (int k = 1; k <= 6; ++k) {
            Complex x = ak_dV_dak(e.a, sp, k);
            Complex tk = x - Complex(0.0, 0.25) *
                                 principal_log(std::exp(Complex(0.0, -4.0) * x));
            worst = std::max(worst, std::abs(tk.imag()));
            worst = std::max(
                worst,
                std::abs(tk.real() - w.branch_integers[k - 1] * kPi / 2.0));
        }
    }
    bool ok = worst < 1e-9;
    // Continuity of Re(-V + W) along 20 random paths.
    double worst_jump = 0.0;
    for (int path = 0; path < 20; ++path) {
        PrismTetParams p0 = sample_valid_params(rng);
        PrismTetParams p1 = sample_valid_params(rng);
        double prev = 0;
        bool have_prev = false;
        for (int s = 0; s <= 200; ++s) {
            double t = s / 200.0;
            PrismTetParams p;
            for (int i = 0; i < 5; ++i)
                p.theta[i] = (1 - t) * p0.theta[i] + t * p1.theta[i];
            p.ell = (1 - t) * p0.ell + t * p1.ell;
            if (!validate_prism_regime(build_gram(p)).pass) {
                have_prev = false;
                continue;
            }
            VolumeReport r = prism_volume(p);
            double v = (-r.V + r.W).real();
            if (have_prev) worst_jump = std::max(worst_jump, std::abs(v - prev));
            prev = v;
            have_prev = true;
        }
    }
    ok = ok && worst_jump < 0.05;
    report(6, "branch integrality and path continuity", ok,
           std::max(worst, worst_jump));
}

void criterion7_dilog() {
    double worst = 0.0;
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 500; ++t) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) < 1e-2 || std::abs(z - 1.0) < 1e-2) continue;
        Complex refl = dilog(z) + dilog(1.0 - z) -
                       (Complex(kPi * kPi / 6.0) -
                        principal_log(z) * principal_log(1.0 - z));
        worst = std::max(worst, std::abs(refl));
        if (std::abs(z.imag()) > 1e-2) {
            Complex l = principal_log(-z);
            Complex inv = dilog(z) + dilog(1.0 / z) -
                          (Complex(-kPi * kPi / 6.0) - l * l / 2.0);
            worst = std::max(worst, std::abs(inv));
        }
    }
    std::uniform_real_distribution<double> ur(0.05, 0.9), ua(0.0, 2.0 * kPi);
    for (int t = 0; t < 100; ++t) {
        Complex z = std::polar(ur(rng), ua(rng));
        worst = std::max(worst, std::abs(dilog(z) - dilog_series(z)));
    }
    report(7, "dilogarithm identity and series suite", worst < 1e-12, worst);
}

void criterion8_metric_agreement() {
    std::mt19937_64 rng(83);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        GramMatrix g = build_gram(sample_valid_params(rng));
        MetricData mc = metric_data(g);
        MetricData mr = measure(realize(g));
        const double diffs[] = {mr.l1 - mc.l1, mr.l2 - mc.l2, mr.l3 - mc.l3,
                                mr.l5 - mc.l5, mr.l6 - mc.l6, mr.mu - mc.mu,
                                mr.ell - mc.ell};
        for (double d : diffs) worst = std::max(worst, std::abs(d));
    }
    report(8, "cofactor metric vs realization metric (50 points)",
           worst < 1e-9, worst);
}

} // namespace

int main() {
    criterion1_regression_table();
    criterion2_monte_carlo();
    criterion3_derivatives();
    criterion4_saddle_discriminant();
    criterion5_factorization();
    criterion6_branch_integrality();
    criterion7_dilog();
    criterion8_metric_agreement();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
