#pragma once

#include <complex>

namespace hypervol {

using Complex = std::complex<double>;

/// Principal branch of the complex logarithm with arg(z) in (-pi, pi].
/// The negative real axis maps to +i*pi (not -i*pi), so principal_log(-1) = i*pi.
/// Throws std::domain_error on z == 0.
Complex principal_log(Complex z);

/// Complex dilogarithm Li2(z), principal branch with the cut along [1, inf).
///
/// On the cut the value is the limit from the lower half-plane, i.e. for real
/// x > 1 the imaginary part is -pi*log(x). Relative accuracy is ~1e-15 away
/// from the branch point z = 1; the value at z = 1 is pi^2/6.
///
/// Evaluation: direct series for small |z|, otherwise inversion/reflection to
/// the half-disk {|z| <= 1, Re z <= 1/2} followed by the Bernoulli series in
/// -log(1-z).
Complex dilog(Complex z);

} // namespace hypervol
