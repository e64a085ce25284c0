// Command-line front end: volume reports, vertex classification, the
// published regression table, algebraic self-checks and the Monte-Carlo
// cross-check. Exit codes: 0 success, 1 usage, 2 regime rejection,
// 3 numerical degeneracy.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypervol/identities.hpp"
#include "hypervol/oracle.hpp"
#include "hypervol/reference_table.hpp"
#include "hypervol/volume.hpp"

using nlohmann::json;
using namespace hypervol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRegime = 2;
constexpr int kExitDegenerate = 3;

// Accepts "pi", "pi/N", "M*pi/N", "M*pi" or a decimal literal.
double parse_angle(const std::string& lit) {
    static const std::regex pi_form(R"(^\s*(?:(\d+)\s*\*\s*)?pi(?:\s*/\s*(\d+))?\s*$)");
    std::smatch m;
    if (std::regex_match(lit, m, pi_form)) {
        double num = m[1].matched ? std::stod(m[1]) : 1.0;
        double den = m[2].matched ? std::stod(m[2]) : 1.0;
        if (den == 0.0) throw std::invalid_argument("angle '" + lit + "': zero denominator");
        return num * std::numbers::pi / den;
    }
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(lit, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("angle '" + lit + "': not a number or pi-fraction");
    }
    if (pos != lit.size()) {
        throw std::invalid_argument("angle '" + lit + "': trailing characters at position " +
                                    std::to_string(pos));
    }
    return v;
}

PrismTetParams parse_params(const std::string& angles, double ell) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : angles) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5) {
        throw std::invalid_argument("--angles needs 5 comma-separated values");
    }
    PrismTetParams p;
    for (int i = 0; i < 5; ++i) p.theta[i] = parse_angle(parts[i]);
    p.ell = ell;
    p.validate();
    return p;
}

std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json report_json(const PrismTetParams& p, const VolumeReport& r,
                 const GramMatrix& g, const StationaryPoints& sp,
                 const EdgeParameters& a) {
    json cof = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(g.cofactors[i][j]);
        cof.push_back(row);
    }
    json av = json::array();
    for (const Complex& x : a.a) av.push_back(complex_json(x));
    return {
        {"params", {{"theta", p.theta}, {"ell", p.ell}}},
        {"a", av},
        {"gram", {{"det", g.det}, {"cofactors", cof}}},
        {"z", {{"minus", complex_json(sp.z_minus)}, {"plus", complex_json(sp.z_plus)}}},
        {"V", complex_json(r.V)},
        {"W", {{"re", r.W.real()}, {"im", r.W.imag()},
               {"branch_integers", r.branch_integers}}},
        {"mu", r.mu},
        {"ell", r.ell},
        {"edge_lengths", {{"l1", r.metric.l1}, {"l2", r.metric.l2},
                          {"l3", r.metric.l3}, {"l5", r.metric.l5},
                          {"l6", r.metric.l6}}},
        {"volume", r.volume},
        {"diagnostics", {{"regime_pass", r.diagnostics.pass},
                         {"violations", r.diagnostics.violations},
                         {"mu_cross_check", r.mu_cross_check},
                         {"saddle_residual", r.saddle_residual},
                         {"nudged", r.nudged}}},
    };
}

int run_volume(const PrismTetParams& p, const std::string& format,
               bool flip_delta) {
    VolumeReport r = prism_volume(p, flip_delta);
    GramMatrix g = build_gram(p);
    EdgeParameters a = to_edge_parameters(p);
    StationaryPoints sp = stationary_points(a.a, g.det, flip_delta);
    if (format == "json") {
        std::cout << report_json(p, r, g, sp, a).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "theta1,theta2,theta3,theta5,theta6,ell,volume,mu,"
                     "l1,l2,l3,l5,l6,V_re,V_im,W_re,W_im,"
                     "n1,n2,n3,n4,n5,n6,saddle_residual\n";
        std::string row;
        for (double t : p.theta) row += fmt9(t) + ",";
        row += fmt9(p.ell) + "," + fmt9(r.volume) + "," + fmt9(r.mu) + "," +
               fmt9(r.metric.l1) + "," + fmt9(r.metric.l2) + "," +
               fmt9(r.metric.l3) + "," + fmt9(r.metric.l5) + "," +
               fmt9(r.metric.l6) + "," + fmt9(r.V.real()) + "," +
               fmt9(r.V.imag()) + "," + fmt9(r.W.real()) + "," +
               fmt9(r.W.imag());
        for (int n : r.branch_integers) row += "," + std::to_string(n);
        row += "," + fmt9(r.saddle_residual);
        std::cout << row << "\n";
    } else {
        std::printf("volume        %.9f\n", r.volume);
        std::printf("mu            %.9f\n", r.mu);
        std::printf("ell           %.9f\n", r.ell);
        std::printf("edge lengths  l1=%.9f l2=%.9f l3=%.9f l5=%.9f l6=%.9f\n",
                    r.metric.l1, r.metric.l2, r.metric.l3, r.metric.l5,
                    r.metric.l6);
        std::printf("V             %.12f %+.12fi\n", r.V.real(), r.V.imag());
        std::printf("W             %.12f %+.12fi  (n = %d %d %d %d %d %d)\n",
                    r.W.real(), r.W.imag(), r.branch_integers[0],
                    r.branch_integers[1], r.branch_integers[2],
                    r.branch_integers[3], r.branch_integers[4],
                    r.branch_integers[5]);
        std::printf("saddle resid  %.3e\n", r.saddle_residual);
        if (r.nudged)
            std::printf("note          ideal edges evaluated at nudged angles\n");
    }
    return kExitOk;
}

int run_classify(const PrismTetParams& p, const std::string& format) {
    GramMatrix g = build_gram(p);
    if (format == "json") {
        json out = {{"params", {{"theta", p.theta}, {"ell", p.ell}}},
                    {"det", g.det},
                    {"vertices", json::array()}};
        for (int i = 0; i < 4; ++i) {
            out["vertices"].push_back(
                {{"index", i + 1},
                 {"cofactor", g.cofactors[i][i]},
                 {"class", to_string(classify_vertex(g, i))}});
        }
        RegimeDiagnostics d = validate_prism_regime(g);
        out["regime_pass"] = d.pass;
        out["violations"] = d.violations;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("det G  %.9f\n", g.det);
        for (int i = 0; i < 4; ++i) {
            std::printf("v%d  c%d%d = %+.9f  %s\n", i + 1, i + 1, i + 1,
                        g.cofactors[i][i], to_string(classify_vertex(g, i)));
        }
        RegimeDiagnostics d = validate_prism_regime(g);
        std::printf("prism regime: %s\n", d.pass ? "pass" : "fail");
        for (const auto& v : d.violations) std::printf("  %s\n", v.c_str());
    }
    return kExitOk;
}

int run_table(const std::string& format, bool flip_delta) {
    json rows = json::array();
    double max_diff = 0.0;
    for (std::size_t i = 0; i < kReferenceTable.size(); ++i) {
        const ReferenceRow& ref = kReferenceTable[i];
        VolumeReport r = prism_volume(ref.params, flip_delta);
        double diff = r.volume - ref.volume;
        max_diff = std::max(max_diff, std::abs(diff));
        if (format == "json") {
            rows.push_back({{"row", i + 1},
                            {"volume", r.volume},
                            {"reference", ref.volume},
                            {"diff", diff},
                            {"mu", r.mu},
                            {"mu_reference", ref.mu}});
        } else if (format == "csv") {
            if (i == 0) std::cout << "row,volume,reference,diff,mu,mu_reference\n";
            std::cout << (i + 1) << "," << fmt9(r.volume) << ","
                      << fmt9(ref.volume) << "," << fmt9(diff) << ","
                      << fmt9(r.mu) << "," << fmt9(ref.mu) << "\n";
        } else {
            std::printf("row %2zu  vol %.9f  ref %.7f  diff %+.2e  mu %.7f\n",
                        i + 1, r.volume, ref.volume, diff, r.mu);
        }
    }
    if (format == "json") {
        std::cout << json{{"rows", rows}, {"max_abs_diff", max_diff}}.dump(2)
                  << "\n";
    } else if (format != "csv") {
        std::printf("max |diff| = %.2e\n", max_diff);
    }
    return kExitOk;
}

int run_check() {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto draw = [&] {
        std::array<Complex, 6> a;
        for (auto& x : a) x = Complex(u(rng), u(rng));
        return a;
    };

    bool all_ok = true;
    auto report = [&](const char* name, bool ok, double worst) {
        std::printf("%-34s %s  (worst %.3e)\n", name, ok ? "pass" : "FAIL",
                    worst);
        all_ok = all_ok && ok;
    };

    {
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            auto a = draw();
            for (int c = 1; c <= 3; ++c)
                worst = std::max(worst, E_residual(a, c));
        }
        report("factorization identity residual", worst < 1e-8, worst);
    }
    {
        // Y specialization at a1 = a6 = 0: a2^3 a3 a4 a5 (a3 a4 + a5).
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            auto a = draw();
            a[0] = a[5] = 0.0;
            Complex expect = a[1] * a[1] * a[1] * a[2] * a[3] * a[4] *
                             (a[2] * a[3] + a[4]);
            worst = std::max(worst, std::abs(Y_polynomial(a) - expect));
        }
        Complex ones = Y_polynomial({1, 1, 1, 1, 1, 1});
        worst = std::max(worst, std::abs(ones - Complex(64.0)));
        report("dE/ddelta polynomial checks", worst < 1e-10, worst);
    }
    {
        double worst = 0.0;
        for (const ReferenceRow& row : kReferenceTable) {
            VolumeReport r = prism_volume(row.params);
            worst = std::max(worst, r.saddle_residual);
        }
        report("stationary-point residuals", worst < 1e-4, worst);
    }
    return all_ok ? kExitOk : kExitDegenerate;
}

int run_oracle(const PrismTetParams& p, std::int64_t samples,
               std::uint64_t seed, const std::string& format) {
    GramMatrix g = build_gram(p);
    RegimeDiagnostics d = validate_prism_regime(g);
    if (!d.pass) throw RegimeError(d);
    Realization r = realize(g);
    KleinPolytope poly = build_klein_polytope(r);
    MonteCarloEstimate est = monte_carlo_volume(poly, samples, seed);
    VolumeReport formula = prism_volume(p);
    double sigma = est.std_error > 0
                       ? (est.value - formula.volume) / est.std_error
                       : 0.0;
    if (format == "json") {
        json out = {{"params", {{"theta", p.theta}, {"ell", p.ell}}},
                    {"estimate", est.value},
                    {"std_error", est.std_error},
                    {"samples", est.samples},
                    {"seed", est.seed},
                    {"formula_volume", formula.volume},
                    {"deviation_sigma", sigma}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("monte carlo   %.6f +- %.6f  (n=%lld, seed=%llu)\n",
                    est.value, est.std_error,
                    static_cast<long long>(est.samples),
                    static_cast<unsigned long long>(est.seed));
        std::printf("formula       %.9f  (%.2f sigma)\n", formula.volume,
                    sigma);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic volume of a prism-truncated tetrahedron"};
    app.require_subcommand(1);

    std::string angles, format = "text";
    double ell = 0.0;
    bool flip_delta = false;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 42;
    if (const char* env = std::getenv("HYPERVOL_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
    }

    auto add_geometry = [&](CLI::App* cmd) {
        cmd->add_option("--angles", angles,
                        "theta1,theta2,theta3,theta5,theta6 (radians or pi-fractions)")
            ->required();
        cmd->add_option("--ell", ell, "prism altitude (>= 0)");
    };

    CLI::App* vol = app.add_subcommand("volume", "compute volume and metric data");
    add_geometry(vol);
    vol->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    vol->add_flag("--flip-delta", flip_delta, "negate the discriminant root (debug)");

    CLI::App* cls = app.add_subcommand("classify", "vertex classes and regime diagnostics");
    add_geometry(cls);
    cls->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* tab = app.add_subcommand("table", "recompute the published regression table");
    tab->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    tab->add_flag("--flip-delta", flip_delta);

    app.add_subcommand("check", "run algebraic self-checks");

    CLI::App* orc = app.add_subcommand("oracle", "Monte-Carlo volume cross-check");
    add_geometry(orc);
    orc->add_option("--samples", samples)->check(CLI::Range(std::int64_t{10000},
                                                            std::int64_t{1} << 40));
    orc->add_option("--seed", seed);
    orc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (vol->parsed()) return run_volume(parse_params(angles, ell), format, flip_delta);
        if (cls->parsed()) return run_classify(parse_params(angles, ell), format);
        if (tab->parsed()) return run_table(format, flip_delta);
        if (orc->parsed()) return run_oracle(parse_params(angles, ell), samples, seed, format);
        return run_check();
    } catch (const RegimeError& e) {
        if (format == "json") {
            json out = {{"error", "regime"}, {"violations", e.diagnostics.violations}};
            std::cout << out.dump(2) << "\n";
        }
        std::cerr << e.what() << "\n";
        return kExitRegime;
    } catch (const DegenerateError& e) {
        if (format == "json") {
            std::cout << json{{"error", "degenerate"}, {"what", e.what()}}.dump(2) << "\n";
        }
        std::cerr << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}
