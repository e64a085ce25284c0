#include "hypervol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

namespace hypervol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Compensated accumulator; the per-sample weights span many orders of
// magnitude near the ball boundary.
struct KahanSum {
    double s = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

} // namespace

double minkowski(const MinkowskiVector& x, const MinkowskiVector& y) {
    return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

Realization realize(const GramMatrix& g) {
    Eigen::Matrix4d G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = g.entries[i][j];

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(G);
    if (es.info() != Eigen::Success) {
        throw DegenerateError("realize: eigendecomposition failed");
    }
    const Eigen::Vector4d w = es.eigenvalues();  // ascending
    if (!(w(0) < 0.0 && w(1) > 0.0)) {
        throw DegenerateError("realize: Gram signature is not (3,1)");
    }
    // Column k of Q scaled by sqrt(|w_k|); rows are the normals, with the
    // negative-eigenvalue column as the time-like coordinate 0.
    Eigen::Matrix4d N = es.eigenvectors();
    for (int k = 0; k < 4; ++k) N.col(k) *= std::sqrt(std::abs(w(k)));

    // Dual basis: <v_i, n_j> = -delta_ij, i.e. V = -G^{-1} N row-wise.
    Eigen::Matrix4d V = -G.fullPivLu().solve(N);

    Realization r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r.normals[i][j] = N(i, j);
            r.vertices[i][j] = V(i, j);
        }
        r.classes[i] = classify_vertex(g, i);
    }

    // Pick the most time-like vertex; if it landed on the lower sheet
    // (x0 < 0), flip the whole configuration. x -> -x is an isometry and
    // preserves <v_i, n_j> = -delta_ij.
    int anchor = 0;
    double best = kInf;
    for (int i = 0; i < 4; ++i) {
        double s = minkowski(r.vertices[i], r.vertices[i]);
        if (s < best) {
            best = s;
            anchor = i;
        }
    }
    if (r.vertices[anchor][0] < 0.0) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                r.normals[i][j] = -r.normals[i][j];
                r.vertices[i][j] = -r.vertices[i][j];
            }
    }

    double resid = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            resid = std::max(resid, std::abs(minkowski(r.normals[i],
                                                       r.normals[j]) -
                                             g.entries[i][j]));
    r.residual = resid;

    for (int i = 0; i < 4; ++i) {
        double s = minkowski(r.vertices[i], r.vertices[i]);
        r.unit_vertices[i] = r.vertices[i];
        if (r.classes[i] != VertexClass::ideal) {
            double n = std::sqrt(std::abs(s));
            for (double& x : r.unit_vertices[i]) x /= n;
        }
    }
    return r;
}

KleinPolytope build_klein_polytope(const Realization& r) {
    KleinPolytope poly;
    // Face planes: <x, n_i> <= 0 on the upper sheet reads n_sp . p <= n_0 in
    // the chart p = x_sp / x_0.
    for (int i = 0; i < 4; ++i) {
        const auto& n = r.normals[i];
        poly.half_spaces.push_back({{n[1], n[2], n[3]}, n[0]});
    }
    // Polar truncation planes, one per ultra-ideal vertex.
    for (int i = 0; i < 4; ++i) {
        if (r.classes[i] != VertexClass::ultra_ideal) continue;
        const auto& v = r.unit_vertices[i];
        poly.half_spaces.push_back({{v[1], v[2], v[3]}, v[0]});
    }

    const int m = static_cast<int>(poly.half_spaces.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                Eigen::Matrix3d A;
                Eigen::Vector3d b;
                int rows[3] = {i, j, k};
                for (int t = 0; t < 3; ++t) {
                    const auto& h = poly.half_spaces[rows[t]];
                    A(t, 0) = h.normal[0];
                    A(t, 1) = h.normal[1];
                    A(t, 2) = h.normal[2];
                    b(t) = h.offset;
                }
                if (std::abs(A.determinant()) < 1e-12) continue;
                Eigen::Vector3d p = A.fullPivLu().solve(b);
                if (p.squaredNorm() > 1.0 + 1e-6) continue;
                bool ok = true;
                for (const auto& h : poly.half_spaces) {
                    if (h.normal[0] * p(0) + h.normal[1] * p(1) +
                            h.normal[2] * p(2) >
                        h.offset + 1e-9) {
                        ok = false;
                        break;
                    }
                }
                if (ok) poly.corners.push_back({p(0), p(1), p(2)});
            }

    if (poly.corners.size() < 4) {
        throw DegenerateError("build_klein_polytope: fewer than 4 corners");
    }
    for (int d = 0; d < 3; ++d) {
        double lo = kInf, hi = -kInf;
        for (const auto& c : poly.corners) {
            lo = std::min(lo, c[d]);
            hi = std::max(hi, c[d]);
        }
        poly.lo[d] = lo - 1e-9;
        poly.hi[d] = hi + 1e-9;
    }
    return poly;
}

MetricData measure(const Realization& r) {
    const auto& u = r.unit_vertices;
    auto cls = r.classes;
    auto acosh_edge = [&](int i, int j) {
        if (cls[i] == VertexClass::ideal || cls[j] == VertexClass::ideal)
            return kInf;
        return std::acosh(std::max(1.0, -minkowski(u[i], u[j])));
    };
    auto asinh_edge = [&](int i, int j) {
        if (cls[i] == VertexClass::ideal || cls[j] == VertexClass::ideal)
            return kInf;
        return std::asinh(-minkowski(u[i], u[j]));
    };
    MetricData m;
    m.l1 = acosh_edge(2, 3);
    m.l2 = asinh_edge(3, 1);
    m.l3 = asinh_edge(3, 0);
    m.l5 = asinh_edge(2, 0);
    m.l6 = asinh_edge(2, 1);
    m.mu = std::acos(std::clamp(-minkowski(u[0], u[1]), -1.0, 1.0));
    m.ell = std::acosh(std::max(1.0, -minkowski(r.normals[2], r.normals[3])));
    return m;
}

MonteCarloEstimate monte_carlo_volume(const KleinPolytope& poly,
                                      std::int64_t samples, std::uint64_t seed,
                                      double clip_radius) {
    if (samples < 8) {
        throw std::invalid_argument("monte_carlo_volume: samples < 8");
    }
    const double clip2 = clip_radius * clip_radius;
    const std::array<double, 3> mid = {(poly.lo[0] + poly.hi[0]) / 2.0,
                                       (poly.lo[1] + poly.hi[1]) / 2.0,
                                       (poly.lo[2] + poly.hi[2]) / 2.0};

    double total = 0.0, var = 0.0;
    std::int64_t used = 0;
    // One stratum per octant of the bounding box; shard seeds are decorrelated
    // with splitmix64 so results are reproducible for a fixed (samples, seed).
    for (int oct = 0; oct < 8; ++oct) {
        std::array<double, 3> lo, hi;
        for (int d = 0; d < 3; ++d) {
            if (oct & (1 << d)) {
                lo[d] = mid[d];
                hi[d] = poly.hi[d];
            } else {
                lo[d] = poly.lo[d];
                hi[d] = mid[d];
            }
        }
        const double vol =
            (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
        std::int64_t n = samples / 8;
        if (oct == 7) n += samples % 8;
        used += n;

        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(oct + 1)));
        std::uniform_real_distribution<double> ux(lo[0], hi[0]);
        std::uniform_real_distribution<double> uy(lo[1], hi[1]);
        std::uniform_real_distribution<double> uz(lo[2], hi[2]);

        KahanSum sw, sw2;
        for (std::int64_t t = 0; t < n; ++t) {
            const double x = ux(rng), y = uy(rng), z = uz(rng);
            const double r2 = x * x + y * y + z * z;
            if (r2 >= clip2) continue;
            bool inside = true;
            for (const auto& h : poly.half_spaces) {
                if (h.normal[0] * x + h.normal[1] * y + h.normal[2] * z >
                    h.offset) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            const double d = 1.0 - r2;
            const double w = 1.0 / (d * d);
            sw.add(w);
            sw2.add(w * w);
        }
        const double mean = sw.s / static_cast<double>(n);
        const double mean2 = sw2.s / static_cast<double>(n);
        total += mean * vol;
        var += vol * vol * std::max(0.0, mean2 - mean * mean) /
               static_cast<double>(n);
    }

    MonteCarloEstimate est;
    est.value = total;
    est.std_error = std::sqrt(var);
    est.samples = used;
    est.seed = seed;
    return est;
}

} // namespace hypervol
