#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hypervol/gram.hpp"

namespace hypervol {

/// Vector in Minkowski space R^{3,1}, coordinate 0 time-like.
using MinkowskiVector = std::array<double, 4>;

/// <x, y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3.
double minkowski(const MinkowskiVector& x, const MinkowskiVector& y);

/// A concrete Minkowski realization of the Gram matrix: unit space-like face
/// normals n_i with <n_i, n_j> = G_ij and the dual vertex vectors v_i with
/// <v_i, n_j> = -delta_ij. Time-like vertices sit on the upper sheet.
/// unit_vertices are scaled by 1/sqrt(|<v,v>|) (left raw for ideal vertices).
struct Realization {
    std::array<MinkowskiVector, 4> normals{};
    std::array<MinkowskiVector, 4> vertices{};
    std::array<MinkowskiVector, 4> unit_vertices{};
    std::array<VertexClass, 4> classes{};
    double residual = 0;  // max |<n_i, n_j> - G_ij|
};

/// Build a realization by eigendecomposition. Throws DegenerateError unless
/// the signature is (3, 1).
Realization realize(const GramMatrix& g);

/// Half-space n . p <= b in the projective (Klein) ball chart p = x_sp / x_0.
struct HalfSpace {
    std::array<double, 3> normal{};
    double offset = 0;
};

/// The truncated tetrahedron as an intersection of half-spaces in the Klein
/// ball: four face planes plus one polar truncation plane per ultra-ideal
/// vertex. `corners` are the feasible triple-plane intersections, `lo`/`hi`
/// their bounding box.
struct KleinPolytope {
    std::vector<HalfSpace> half_spaces;
    std::vector<std::array<double, 3>> corners;
    std::array<double, 3> lo{}, hi{};
};

KleinPolytope build_klein_polytope(const Realization& r);

/// Metric data recovered from Minkowski inner products alone (no cofactors):
/// an independent cross-check of metric_data.
MetricData measure(const Realization& r);

struct MonteCarloEstimate {
    double value = 0;
    double std_error = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Stratified Monte-Carlo integration of the hyperbolic volume element
/// 1/(1 - r^2)^2 over the polytope. Deterministic for a fixed (samples, seed)
/// pair. Points with r >= clip_radius are discarded (integrable singularity
/// at ideal vertices).
MonteCarloEstimate monte_carlo_volume(const KleinPolytope& poly,
                                      std::int64_t samples, std::uint64_t seed,
                                      double clip_radius = 1.0 - 1e-6);

} // namespace hypervol
