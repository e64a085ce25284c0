#pragma once

#include <array>

#include "hypervol/gram.hpp"

namespace hypervol {

/// The 84-monomial polynomial Y(a_1..a_6) appearing in the closed form of
/// dE/ddelta. Specializes to a2^3 a3 a4 a5 (a3 a4 + a5) at a1 = a6 = 0 and
/// to 64 at a = (1,...,1).
Complex Y_polynomial(const std::array<Complex, 6>& a);

/// The factorization identity E(a, delta) for one of the three edge cases
/// (which in 1..3, keyed to the a1-, a2- and a4-edges). delta is a free
/// variable here; E vanishes identically when delta^2 = det G(a).
Complex E_value(const std::array<Complex, 6>& a, Complex delta, int which);

/// |E(a, sqrt(det G))| divided by the magnitude of the larger of the two
/// products being cancelled. Should be ~0 at any complex a.
double E_residual(const std::array<Complex, 6>& a, int which);

} // namespace hypervol
