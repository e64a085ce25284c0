#include "hypervol/gram.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hypervol {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void PrismTetParams::validate() const {
    for (double t : theta) {
        if (!(t >= 0.0 && t <= kPi)) {
            throw std::invalid_argument("PrismTetParams: theta out of [0, pi]");
        }
    }
    if (!(ell >= 0.0) || !std::isfinite(ell)) {
        throw std::invalid_argument("PrismTetParams: ell must be finite and >= 0");
    }
}

const char* to_string(VertexClass v) {
    switch (v) {
        case VertexClass::proper: return "proper";
        case VertexClass::ideal: return "ideal";
        case VertexClass::ultra_ideal: return "ultra_ideal";
    }
    return "?";
}

RegimeError::RegimeError(RegimeDiagnostics d)
    : std::runtime_error([&d] {
          std::string msg = "prism regime rejected:";
          for (const auto& v : d.violations) msg += " " + v;
          return msg;
      }()),
      diagnostics(std::move(d)) {}

EdgeParameters to_edge_parameters(const PrismTetParams& p) {
    p.validate();
    EdgeParameters e;
    e.a[0] = std::polar(1.0, p.theta[0]);
    e.a[1] = std::polar(1.0, p.theta[1]);
    e.a[2] = std::polar(1.0, p.theta[2]);
    e.a[3] = std::exp(p.ell);
    e.a[4] = std::polar(1.0, p.theta[3]);
    e.a[5] = std::polar(1.0, p.theta[4]);
    return e;
}

GramMatrix build_gram(const PrismTetParams& p) {
    p.validate();
    const double c1 = std::cos(p.theta[0]);
    const double c2 = std::cos(p.theta[1]);
    const double c3 = std::cos(p.theta[2]);
    const double c5 = std::cos(p.theta[3]);
    const double c6 = std::cos(p.theta[4]);
    const double ch = std::cosh(p.ell);

    GramMatrix g;
    g.entries = {{{1, -c1, -c2, -c6},
                  {-c1, 1, -c3, -c5},
                  {-c2, -c3, 1, -ch},
                  {-c6, -c5, -ch, 1}}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            g.cofactors[i][j] = detail::cofactor(g.entries, i, j);
    g.det = detail::det4(g.entries);
    return g;
}

detail::Mat4<Complex> build_complex_gram(const std::array<Complex, 6>& a) {
    auto f = [](Complex x) { return -(x + 1.0 / x) / 2.0; };
    return {{{Complex(1), f(a[0]), f(a[1]), f(a[5])},
             {f(a[0]), Complex(1), f(a[2]), f(a[4])},
             {f(a[1]), f(a[2]), Complex(1), f(a[3])},
             {f(a[5]), f(a[4]), f(a[3]), Complex(1)}}};
}

VertexClass classify_vertex(const GramMatrix& g, int i) {
    const double cii = g.cofactors[i][i];
    if (cii < -kCofactorTol) return VertexClass::ultra_ideal;
    if (cii > kCofactorTol) return VertexClass::proper;
    return VertexClass::ideal;
}

RegimeDiagnostics validate_prism_regime(const GramMatrix& g) {
    RegimeDiagnostics d;
    auto c = [&](int i, int j) { return g.cofactors[i][j]; };
    auto fail = [&](const std::string& what, double value) {
        std::ostringstream os;
        os << what << " (value " << value << ")";
        d.violations.push_back(os.str());
    };
    // Truncated vertices v1, v2 must be ultra-ideal; boundary (ideal) is not
    // a prism. Vertices v3, v4 must be proper or ideal.
    if (!(c(0, 0) < -kCofactorTol)) fail("c11 >= 0", c(0, 0));
    if (!(c(1, 1) < -kCofactorTol)) fail("c22 >= 0", c(1, 1));
    if (!(c(2, 2) > -kCofactorTol)) fail("c33 < 0", c(2, 2));
    if (!(c(3, 3) > -kCofactorTol)) fail("c44 < 0", c(3, 3));
    if (!(g.det < kCofactorTol)) fail("det >= 0", g.det);
    if (std::abs(g.det) <= kCofactorTol) fail("det = 0", g.det);
    // Real mu: c12^2 <= c11*c22 (Jacobi: c12^2 - c11 c22 = det * sinh^2 ell,
    // zero exactly at the ell = 0 boundary).
    const double s = c(0, 1) * c(0, 1) - c(0, 0) * c(1, 1);
    if (!(s <= kCofactorTol)) fail("c12^2 - c11*c22 > 0", s);
    // Vertex-pair cofactors must not go negative, else a truncation plane
    // cuts off one of the proper vertices and the cell is not a prism.
    if (!(c(2, 3) > -kCofactorTol)) fail("c34 < 0", c(2, 3));
    if (!(c(1, 3) > -kCofactorTol)) fail("c24 < 0", c(1, 3));
    if (!(c(0, 3) > -kCofactorTol)) fail("c14 < 0", c(0, 3));
    if (!(c(0, 2) > -kCofactorTol)) fail("c13 < 0", c(0, 2));
    if (!(c(1, 2) > -kCofactorTol)) fail("c23 < 0", c(1, 2));
    // Both feet of the altitude (the common perpendicular of faces 3 and 4)
    // must stay inside faces 1 and 2. Each minor below changes sign exactly
    // when a foot crosses one of those faces, after which the six half-spaces
    // no longer bound a quadrilateral prism (verified against the Klein-model
    // realization on random samples).
    const auto& e = g.entries;
    const double feet[4] = {e[0][2] * e[2][3] - e[0][3],
                            e[1][2] * e[2][3] - e[1][3],
                            e[0][3] * e[2][3] - e[0][2],
                            e[1][3] * e[2][3] - e[1][2]};
    const char* names[4] = {"G13*G34 - G14 < 0", "G23*G34 - G24 < 0",
                            "G14*G34 - G13 < 0", "G24*G34 - G23 < 0"};
    for (int k = 0; k < 4; ++k) {
        if (!(feet[k] > -kCofactorTol)) fail(names[k], feet[k]);
    }
    d.pass = d.violations.empty();
    return d;
}

namespace {

double safe_asinh_ratio(double num, double rad) {
    // rad is -cii*cjj for an ultra-ideal/proper pair; a vanishing radicand
    // means an ideal vertex, where the edge runs off to infinity.
    if (rad < -kCofactorTol) {
        throw RegimeError({false, {"negative radicand in edge-length formula"}});
    }
    if (rad <= kCofactorTol * kCofactorTol) return kInf;
    return std::asinh(num / std::sqrt(rad));
}

} // namespace

MetricData metric_data(const GramMatrix& g) {
    auto diag = validate_prism_regime(g);
    if (!diag.pass) throw RegimeError(std::move(diag));
    auto c = [&](int i, int j) { return g.cofactors[i][j]; };

    MetricData m;
    const double r34 = c(2, 2) * c(3, 3);
    if (r34 <= kCofactorTol * kCofactorTol) {
        m.l1 = kInf;  // v3 or v4 ideal
    } else {
        m.l1 = std::acosh(std::max(1.0, c(2, 3) / std::sqrt(r34)));
    }
    m.l2 = safe_asinh_ratio(c(1, 3), -c(1, 1) * c(3, 3));
    m.l3 = safe_asinh_ratio(c(0, 3), -c(0, 0) * c(3, 3));
    m.l5 = safe_asinh_ratio(c(0, 2), -c(0, 0) * c(2, 2));
    m.l6 = safe_asinh_ratio(c(1, 2), -c(1, 1) * c(2, 2));

    // cos mu = c12 / sqrt(|c11||c22|); the square-root branch is fixed so
    // that the reference table's mu values come out.
    double cm = c(0, 1) / std::sqrt(c(0, 0) * c(1, 1));
    if (std::abs(cm) > 1.0 + 1e-7) {
        throw RegimeError({false, {"cos(mu) out of range"}});
    }
    cm = std::clamp(cm, -1.0, 1.0);
    m.mu = std::acos(cm);

    m.ell = std::acosh(std::max(1.0, -g.entries[2][3]));
    return m;
}

} // namespace hypervol
