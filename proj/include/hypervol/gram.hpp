#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervol/complex_special.hpp"
#include "hypervol/detail/mat4.hpp"

namespace hypervol {

/// Tolerance for cofactor sign tests (ideal-vertex detection and the
/// prism-regime boundary cases).
inline constexpr double kCofactorTol = 1e-9;

/// Input parameters of a prism-truncated tetrahedron: the five essential
/// dihedral angles (theta_1, theta_2, theta_3, theta_5, theta_6, radians,
/// in [0, pi]) and the prism altitude ell >= 0.
struct PrismTetParams {
    std::array<double, 5> theta{};  // theta_1, theta_2, theta_3, theta_5, theta_6
    double ell = 0.0;

    void validate() const;
};

/// The six complex edge parameters a_1..a_6: a_k = exp(i*theta_k) for
/// k in {1,2,3,5,6} and a_4 = exp(ell).
struct EdgeParameters {
    std::array<Complex, 6> a{};
};

/// 4x4 Gram matrix of the outward face normals, with determinant and the
/// full table of signed cofactors.
struct GramMatrix {
    detail::Mat4<double> entries{};
    double det = 0.0;
    detail::Mat4<double> cofactors{};

    double c(int i, int j) const { return cofactors[i][j]; }
};

enum class VertexClass { proper, ideal, ultra_ideal };

const char* to_string(VertexClass v);

/// Edge lengths l_1, l_2, l_3, l_5, l_6, the dual dihedral angle mu and the
/// altitude ell recovered from Gram cofactors. Lengths are +infinity when the
/// corresponding vertex is ideal (the edge runs out to the boundary).
struct MetricData {
    double l1 = 0, l2 = 0, l3 = 0, l5 = 0, l6 = 0;
    double mu = 0;
    double ell = 0;
};

/// Outcome of the prism-regime validation: the six sign conditions that a
/// prism-truncated Gram matrix must satisfy, with a list of violations.
struct RegimeDiagnostics {
    bool pass = false;
    std::vector<std::string> violations;
};

struct RegimeError : std::runtime_error {
    RegimeDiagnostics diagnostics;
    explicit RegimeError(RegimeDiagnostics d);
};

struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EdgeParameters to_edge_parameters(const PrismTetParams& p);

GramMatrix build_gram(const PrismTetParams& p);

/// Gram matrix of Eq-(4) form evaluated at arbitrary complex a-parameters
/// (used by the algebraic identity checks, where the a_k are free variables).
detail::Mat4<Complex> build_complex_gram(const std::array<Complex, 6>& a);

/// proper / ideal / ultra-ideal from the sign of c_ii (index i in 0..3).
VertexClass classify_vertex(const GramMatrix& g, int i);

/// Necessary sign conditions for the prism-truncated regime:
/// c11 < 0, c22 < 0, c33 > 0, c44 > 0, det < 0 and c12^2 - c11*c22 <= 0
/// (real mu). Boundary cases (ideal vertices, ell = 0) pass within
/// kCofactorTol.
RegimeDiagnostics validate_prism_regime(const GramMatrix& g);

/// Recover all metric data from cofactors. Requires a passing regime check.
MetricData metric_data(const GramMatrix& g);

} // namespace hypervol
