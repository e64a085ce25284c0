#include "hypervol/complex_special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypervol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSqOver6 = kPi * kPi / 6.0;

// B_n / (n+1)! for the expansion Li2(z) = sum_n B_n u^(n+1) / (n+1)!,
// u = -log(1-z). Odd Bernoulli numbers beyond B_1 vanish.
constexpr double kBernCoeff[] = {
    1.0,                                  // n = 0
    -1.0 / 4.0,                           // n = 1
    1.0 / 36.0,                           // n = 2
    0.0,
    -1.0 / 3600.0,                        // n = 4
    0.0,
    1.0 / 211680.0,                       // n = 6
    0.0,
    -1.0 / 10886400.0,                    // n = 8
    0.0,
    1.0 / 526901760.0,                    // n = 10
    0.0,
    -4.0647616451442255e-11,              // n = 12
    0.0,
    8.9216910204564526e-13,               // n = 14
    0.0,
    -1.9939295860721076e-14,              // n = 16
    0.0,
    4.5189800296199182e-16,               // n = 18
    0.0,
    -1.0356517612181247e-17,              // n = 20
    0.0,
    2.3952186210261867e-19,               // n = 22
    0.0,
    -5.5817858743250093e-21,              // n = 24
    0.0,
    1.3091507554183213e-22,               // n = 26
    0.0,
    -3.0874198024267403e-24,              // n = 28
    0.0,
    7.3159756527022034e-26,               // n = 30
};

// Direct power series, |z| <= 1/2.
Complex dilog_series(Complex z) {
    Complex sum = z;
    Complex zp = z;
    for (int n = 2; n <= 70; ++n) {
        zp *= z;
        Complex term = zp / double(n * n);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Bernoulli series in u = -log(1-z); good on {|z| <= 1, Re z <= 1/2}.
Complex dilog_bernoulli(Complex z) {
    Complex u = -std::log(1.0 - z);
    Complex sum = 0.0;
    Complex up = 1.0;
    for (double c : kBernCoeff) {
        up *= u;
        if (c != 0.0) sum += c * up;
    }
    return sum;
}

// |z| <= 1.
Complex dilog_unit(Complex z) {
    if (std::abs(z) <= 0.5) return dilog_series(z);
    if (z.real() > 0.5) {
        // reflection: Li2(z) + Li2(1-z) = pi^2/6 - log(z) log(1-z)
        Complex w = 1.0 - z;
        Complex rest = (w == Complex(0.0)) ? Complex(0.0)
                                           : std::log(z) * std::log(w);
        Complex li2w = (std::abs(w) <= 0.5) ? dilog_series(w) : dilog_bernoulli(w);
        return kPiSqOver6 - rest - li2w;
    }
    return dilog_bernoulli(z);
}

} // namespace

Complex principal_log(Complex z) {
    if (z == Complex(0.0, 0.0)) {
        throw std::domain_error("principal_log: argument is zero");
    }
    Complex w = std::log(z);
    if (w.imag() == -kPi) w = Complex(w.real(), kPi);
    return w;
}

Complex dilog(Complex z) {
    // Cut convention: points on [1, inf) take the limit from Im z < 0.
    if (z.imag() == 0.0 && z.real() > 1.0) {
        z = Complex(z.real(), -0.0);
    }
    double r = std::abs(z);
    if (r <= 1.0) return dilog_unit(z);
    // inversion: Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2
    Complex lg = std::log(-z);
    return -kPiSqOver6 - 0.5 * lg * lg - dilog_unit(1.0 / z);
}

} // namespace hypervol
