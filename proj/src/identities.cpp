#include "hypervol/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hypervol/volume.hpp"

namespace hypervol {

namespace {

struct YTerm {
    int coeff;
    std::array<int, 6> exponents;
};

// Monomial table of Y, ordered by total degree then lexicographically.
// Frozen check values: 84 terms, coefficients sum to 64.
constexpr YTerm kYTerms[] = {
    {1, {1, 2, 1, 2, 1, 0}}, {1, {2, 1, 2, 2, 1, 0}}, {1, {0, 3, 2, 2, 1, 0}}, {1, {1, 2, 3, 2, 1, 0}},
    {1, {1, 2, 0, 1, 2, 0}}, {1, {2, 1, 1, 1, 2, 0}}, {1, {0, 3, 1, 1, 2, 0}}, {1, {1, 2, 2, 1, 2, 0}},
    {1, {2, 2, 1, 2, 0, 1}}, {1, {1, 1, 2, 2, 0, 1}}, {1, {1, 3, 2, 2, 0, 1}}, {1, {0, 2, 3, 2, 0, 1}},
    {1, {2, 2, 0, 1, 1, 1}}, {1, {1, 1, 1, 1, 1, 1}}, {1, {3, 1, 1, 1, 1, 1}}, {1, {1, 3, 1, 1, 1, 1}},
    {1, {2, 0, 2, 1, 1, 1}}, {2, {0, 2, 2, 1, 1, 1}}, {-1, {2, 2, 2, 1, 1, 1}}, {1, {4, 2, 2, 1, 1, 1}},
    {1, {1, 1, 3, 1, 1, 1}}, {1, {1, 1, 1, 3, 1, 1}}, {-1, {3, 1, 1, 3, 1, 1}}, {1, {0, 2, 2, 3, 1, 1}},
    {-1, {2, 2, 2, 3, 1, 1}}, {1, {0, 2, 1, 0, 2, 1}}, {-1, {2, 2, 1, 0, 2, 1}}, {1, {1, 1, 2, 0, 2, 1}},
    {-1, {3, 1, 2, 0, 2, 1}}, {1, {1, 1, 0, 2, 2, 1}}, {1, {2, 0, 1, 2, 2, 1}}, {2, {0, 2, 1, 2, 2, 1}},
    {-1, {2, 2, 1, 2, 2, 1}}, {1, {4, 2, 1, 2, 2, 1}}, {1, {1, 1, 2, 2, 2, 1}}, {1, {3, 1, 2, 2, 2, 1}},
    {1, {1, 3, 2, 2, 2, 1}}, {1, {2, 2, 3, 2, 2, 1}}, {1, {0, 2, 0, 1, 3, 1}}, {1, {1, 1, 1, 1, 3, 1}},
    {1, {1, 3, 1, 1, 3, 1}}, {1, {2, 2, 2, 1, 3, 1}}, {1, {2, 1, 1, 1, 0, 2}}, {1, {1, 0, 2, 1, 0, 2}},
    {1, {1, 2, 2, 1, 0, 2}}, {1, {0, 1, 3, 1, 0, 2}}, {1, {1, 2, 1, 0, 1, 2}}, {-1, {3, 2, 1, 0, 1, 2}},
    {1, {0, 1, 2, 0, 1, 2}}, {-1, {2, 1, 2, 0, 1, 2}}, {1, {2, 1, 0, 2, 1, 2}}, {1, {1, 0, 1, 2, 1, 2}},
    {1, {1, 2, 1, 2, 1, 2}}, {1, {3, 2, 1, 2, 1, 2}}, {2, {0, 1, 2, 2, 1, 2}}, {-1, {2, 1, 2, 2, 1, 2}},
    {1, {4, 1, 2, 2, 1, 2}}, {1, {2, 3, 2, 2, 1, 2}}, {1, {1, 2, 3, 2, 1, 2}}, {1, {1, 2, 0, 1, 2, 2}},
    {2, {0, 1, 1, 1, 2, 2}}, {-1, {2, 1, 1, 1, 2, 2}}, {1, {4, 1, 1, 1, 2, 2}}, {1, {2, 3, 1, 1, 2, 2}},
    {1, {1, 0, 2, 1, 2, 2}}, {1, {1, 2, 2, 1, 2, 2}}, {1, {3, 2, 2, 1, 2, 2}}, {1, {2, 1, 3, 1, 2, 2}},
    {1, {0, 1, 1, 3, 2, 2}}, {-1, {2, 1, 1, 3, 2, 2}}, {1, {1, 2, 2, 3, 2, 2}}, {-1, {3, 2, 2, 3, 2, 2}},
    {1, {0, 1, 0, 2, 3, 2}}, {1, {1, 0, 1, 2, 3, 2}}, {1, {1, 2, 1, 2, 3, 2}}, {1, {2, 1, 2, 2, 3, 2}},
    {1, {1, 1, 1, 1, 1, 3}}, {1, {0, 0, 2, 1, 1, 3}}, {1, {2, 2, 2, 1, 1, 3}}, {1, {1, 1, 3, 1, 1, 3}},
    {1, {1, 1, 0, 2, 2, 3}}, {1, {0, 0, 1, 2, 2, 3}}, {1, {2, 2, 1, 2, 2, 3}}, {1, {1, 1, 2, 2, 2, 3}},
};

Complex ipow(Complex x, int n) {
    Complex r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// The two products whose difference is E: first = phi(z-) psi(z+) (c + delta s),
// second = phi(z+) psi(z-) (c - delta s).
std::pair<Complex, Complex> e_products(const std::array<Complex, 6>& a,
                                       Complex delta, int which) {
    const Complex a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4],
                  a6 = a[5];
    QCoefficients q = compute_q(a);
    const Complex zm = (-q.qhat1 - 4.0 * delta) / (2.0 * q.qhat2);
    const Complex zp = (-q.qhat1 + 4.0 * delta) / (2.0 * q.qhat2);

    auto g = build_complex_gram(a);
    Complex p1, p2, m1, m2, c, s;
    switch (which) {
        case 1:
            p1 = a1 * a2 * a3;
            p2 = a1 * a5 * a6;
            m1 = a1 * a2 * a4 * a5;
            m2 = a1 * a3 * a4 * a6;
            c = detail::cofactor(g, 2, 3);
            s = (a1 - 1.0 / a1) / 2.0;
            break;
        case 2:
            p1 = a1 * a2 * a3;
            p2 = a2 * a4 * a6;
            m1 = a1 * a2 * a4 * a5;
            m2 = a2 * a3 * a5 * a6;
            c = detail::cofactor(g, 1, 3);
            s = (a2 - 1.0 / a2) / 2.0;
            break;
        case 3:
            p1 = a3 * a4 * a5;
            p2 = a2 * a4 * a6;
            m1 = a1 * a2 * a4 * a5;
            m2 = a1 * a3 * a4 * a6;
            c = detail::cofactor(g, 0, 1);
            s = (a4 - 1.0 / a4) / 2.0;
            break;
        default:
            throw std::invalid_argument("E_value: case must be 1, 2 or 3");
    }
    auto phi = [&](Complex z) { return (1.0 + p1 * z) * (1.0 + p2 * z); };
    auto psi = [&](Complex z) { return (1.0 - m1 * z) * (1.0 - m2 * z); };
    return {phi(zm) * psi(zp) * (c + delta * s),
            phi(zp) * psi(zm) * (c - delta * s)};
}

} // namespace

Complex Y_polynomial(const std::array<Complex, 6>& a) {
    Complex s = 0.0;
    for (const YTerm& t : kYTerms) {
        Complex m = static_cast<double>(t.coeff);
        for (int k = 0; k < 6; ++k) m *= ipow(a[k], t.exponents[k]);
        s += m;
    }
    return s;
}

Complex E_value(const std::array<Complex, 6>& a, Complex delta, int which) {
    auto [first, second] = e_products(a, delta, which);
    return first - second;
}

double E_residual(const std::array<Complex, 6>& a, int which) {
    const Complex delta =
        std::sqrt(Complex(detail::det4(build_complex_gram(a))));
    auto [first, second] = e_products(a, delta, which);
    const double scale =
        std::max({std::abs(first), std::abs(second), 1.0});
    return std::abs(first - second) / scale;
}

} // namespace hypervol
