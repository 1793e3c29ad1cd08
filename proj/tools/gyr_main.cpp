// gyr: command-line calculator for gyrogroup/gyrovector operations on the
// open s-ball, with curve sampling, axiom audits, and the relativistic and
// qubit applications. JSON output by default; numbers carry 17 significant
// digits so results round-trip exactly.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gyro/axioms.hpp"
#include "gyro/ball.hpp"
#include "gyro/einstein.hpp"
#include "gyro/errors.hpp"
#include "gyro/geometry.hpp"
#include "gyro/mobius.hpp"
#include "gyro/qic.hpp"
#include "gyro/relativity.hpp"

namespace {

using gyro::vec::Vec;

struct Config {
    double s = 1.0;
    int dim = 3;
    bool dim_given = false;
    std::string model = "mobius";
    std::string format = "json";
    std::uint64_t seed = 0;
    double tol = 1e-9;

    gyro::Model the_model() const { return gyro::model_from_name(model); }
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_vec_json(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt(v[i]);
    }
    return out + "]";
}

std::string fmt_vec_csv(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt(v[i]);
    }
    return out;
}

Vec parse_vector(const std::string& text) {
    std::string t = text;
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    if (t.empty()) throw gyro::ParseError("empty vector argument");

    if (t.front() == '[') {
        try {
            nlohmann::json j = nlohmann::json::parse(t);
            if (!j.is_array() || j.empty()) throw gyro::ParseError("vector JSON must be a nonempty array");
            return j.get<Vec>();
        } catch (const nlohmann::json::exception& e) {
            throw gyro::ParseError(std::string("invalid vector JSON: ") + e.what());
        }
    }

    Vec out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            while (used < item.size() && (item[used] == ' ' || item[used] == '\t')) ++used;
            if (used != item.size()) throw gyro::ParseError("trailing characters in number '" + item + "'");
        } catch (const std::logic_error&) {
            throw gyro::ParseError("cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty()) throw gyro::ParseError("empty vector argument");
    return out;
}

gyro::BallVector to_ball(const Config& cfg, const std::string& text) {
    Vec coords = parse_vector(text);
    if (cfg.dim_given && coords.size() != static_cast<std::size_t>(cfg.dim)) {
        throw gyro::ParseError("vector has " + std::to_string(coords.size()) +
                               " components but --dim is " + std::to_string(cfg.dim));
    }
    gyro::BallParams params(cfg.s, static_cast<int>(coords.size()));
    return gyro::make_ball_vector(std::move(coords), params);
}

gyro::GyroOp op_for(const Config& cfg, const gyro::BallParams& params) {
    return cfg.the_model() == gyro::Model::mobius ? gyro::mobius_op(params)
                                                  : gyro::einstein_op(params);
}

void emit_vector_result(const Config& cfg, const Vec& v, const std::string& extra_json = "") {
    if (cfg.format == "csv") {
        std::cout << fmt_vec_csv(v) << "\n";
    } else {
        std::cout << "{\"result\":" << fmt_vec_json(v) << extra_json << "}\n";
    }
}

void cmd_add(const Config& cfg, const std::string& us, const std::string& vs) {
    const gyro::BallVector u = to_ball(cfg, us);
    const gyro::BallVector v = to_ball(cfg, vs);
    const gyro::BallVector w = gyro::model_add(cfg.the_model(), u, v);
    const std::string extra = ",\"gamma_direct\":" + fmt(gyro::gamma(w)) +
                              ",\"gamma_identity\":" + fmt(gyro::model_gamma_of_sum(cfg.the_model(), u, v));
    emit_vector_result(cfg, w.coords(), extra);
}

void cmd_coadd(const Config& cfg, const std::string& us, const std::string& vs) {
    const gyro::BallVector u = to_ball(cfg, us);
    const gyro::BallVector v = to_ball(cfg, vs);
    emit_vector_result(cfg, gyro::model_coadd(cfg.the_model(), u, v).coords());
}

void cmd_gyr(const Config& cfg, const std::string& as, const std::string& bs, const std::string& zs) {
    const gyro::BallVector a = to_ball(cfg, as);
    const gyro::BallVector b = to_ball(cfg, bs);
    const gyro::BallVector z = to_ball(cfg, zs);
    emit_vector_result(cfg, gyro::gyr(op_for(cfg, a.params()), a, b, z).coords());
}

void cmd_scalar(const Config& cfg, double r, const std::string& vs) {
    emit_vector_result(cfg, gyro::scalar_mul(r, to_ball(cfg, vs)).coords());
}

void cmd_gamma(const Config& cfg, const std::string& vs) {
    const double g = gyro::gamma(to_ball(cfg, vs));
    if (cfg.format == "csv") {
        std::cout << fmt(g) << "\n";
    } else {
        std::cout << "{\"gamma\":" << fmt(g) << "}\n";
    }
}

void cmd_curve(const Config& cfg, const std::string& kind_name, const std::string& as,
               const std::string& bs, int samples, double t0, double t1) {
    if (kind_name != "gyroline" && kind_name != "cogyroline") {
        throw gyro::ParseError("curve kind must be gyroline or cogyroline");
    }
    if (samples < 1) throw gyro::ParseError("--samples must be >= 1");
    const gyro::CurveKind kind =
        kind_name == "gyroline" ? gyro::CurveKind::gyroline : gyro::CurveKind::cogyroline;
    const gyro::BallVector A = to_ball(cfg, as);
    const gyro::BallVector B = to_ball(cfg, bs);
    const gyro::GyroCurve curve = gyro::make_curve(kind, A, B, cfg.the_model());

    std::vector<std::pair<double, Vec>> rows;
    rows.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(samples);
        rows.emplace_back(t, gyro::curve_point(curve, t).coords());
    }

    const bool diagnose = A.dim() == 2 && cfg.the_model() == gyro::Model::mobius;
    std::string diag_json;
    if (diagnose) {
        const gyro::ArcDiagnostics d = gyro::arc_diagnostics(curve, 64);
        diag_json = std::string("{\"is_line\":") + (d.is_line ? "true" : "false") +
                    ",\"center\":[" + fmt(d.center[0]) + "," + fmt(d.center[1]) + "]" +
                    ",\"radius\":" + (d.is_line ? "\"inf\"" : fmt(d.radius)) +
                    ",\"boundary_angle\":" + fmt(d.boundary_angle) +
                    ",\"orthogonality_residual\":" + fmt(d.orthogonality_residual) +
                    ",\"diametric_residual\":" + fmt(d.diametric_residual) + "}";
    }

    if (cfg.format == "csv") {
        std::cout << "t";
        for (std::size_t i = 0; i < rows[0].second.size(); ++i) std::cout << ",x" << i + 1;
        std::cout << "\n";
        for (const auto& [t, x] : rows) std::cout << fmt(t) << "," << fmt_vec_csv(x) << "\n";
        if (diagnose) std::cout << "# diagnostics " << diag_json << "\n";
    } else {
        std::cout << "{\"kind\":\"" << kind_name << "\",\"model\":\"" << cfg.model
                  << "\",\"s\":" << fmt(cfg.s) << ",\"points\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "{\"t\":" << fmt(rows[i].first) << ",\"x\":" << fmt_vec_json(rows[i].second)
                      << "}";
        }
        std::cout << "]";
        if (diagnose) std::cout << ",\"diagnostics\":" << diag_json;
        std::cout << "}\n";
    }
}

int cmd_audit(const Config& cfg, int samples) {
    if (samples < 1) throw gyro::ParseError("--samples must be >= 1");
    const gyro::BallParams params(cfg.s, cfg.dim);
    const gyro::AxiomReport report =
        gyro::audit(op_for(cfg, params), samples, cfg.seed, gyro::Tolerance{1e-12, cfg.tol});
    std::cout << report.to_json() << "\n";
    return report.all_pass() ? 0 : 1;
}

void cmd_invmass(const Config& cfg, const std::string& input) {
    std::string text;
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(input);
        if (!f) throw gyro::ParseError("cannot open input file '" + input + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    const gyro::ParticleSystem system = gyro::particle_system_from_json(text);
    const double m0 = gyro::invariant_mass(system);
    double total = 0.0;
    for (const auto& p : system.particles) total += p.mass;
    if (cfg.format == "csv") {
        std::cout << fmt(m0) << "," << fmt(total) << "," << fmt(gyro::fictitious_mass(system))
                  << "\n";
    } else {
        std::cout << "{\"m0\":" << fmt(m0) << ",\"total_mass\":" << fmt(total)
                  << ",\"fictitious_mass\":" << fmt(gyro::fictitious_mass(system)) << "}\n";
    }
}

std::string aberration_json(const gyro::AberrationResult& r) {
    return "{\"direction\":" + fmt_vec_json(r.direction) + ",\"speed\":" + fmt(r.speed) +
           ",\"exceeds_light\":" + (r.exceeds_light ? "true" : "false") + "}";
}

void cmd_aberrate(const Config& cfg, const std::string& us, const std::string& vs) {
    const gyro::BallVector u = to_ball(cfg, us);
    const gyro::BallVector v_obs = to_ball(cfg, vs);
    const gyro::AberrationResult cl = gyro::aberrate(u, v_obs, gyro::AberrationMode::classical);
    const gyro::AberrationResult re = gyro::aberrate(u, v_obs, gyro::AberrationMode::relativistic);
    double gap = 0.0;
    if (gyro::vec::norm(cl.direction) > 0.0 && gyro::vec::norm(re.direction) > 0.0) {
        // chord form: no acos noise amplification when the directions coincide
        const double chord = gyro::vec::dist(cl.direction, re.direction);
        gap = 2.0 * std::asin(std::min(1.0, 0.5 * chord));
    }
    std::cout << "{\"classical\":" << aberration_json(cl)
              << ",\"relativistic\":" << aberration_json(re) << ",\"angular_gap\":" << fmt(gap)
              << "}\n";
}

void cmd_fidelity(const Config& cfg, const std::string& us, const std::string& vs) {
    Config unit = cfg;
    unit.s = 1.0; // Bloch vectors live in the unit ball
    const gyro::BallVector u = to_ball(unit, us);
    const gyro::BallVector v = to_ball(unit, vs);
    const double fm = gyro::bures_fidelity(u, v, gyro::FidelityMethod::matrix);
    const double fg = gyro::bures_fidelity(u, v, gyro::FidelityMethod::gyro);
    std::cout << "{\"fidelity_matrix\":" << fmt(fm) << ",\"fidelity_gyro\":" << fmt(fg)
              << ",\"residual\":" << fmt(std::abs(fm - fg)) << "}\n";
}

int exit_code_for(gyro::errc code) {
    switch (code) {
        case gyro::errc::parse_error:
            return 2;
        case gyro::errc::degenerate_curve:
        case gyro::errc::degenerate_triangle:
        case gyro::errc::degenerate_fit:
            return 4;
        default:
            return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gyrovector calculator on the open s-ball"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--s", cfg.s, "ball radius (default 1)")->envname("GYR_S");
    auto* dim_opt = app.add_option("--dim", cfg.dim, "ambient dimension (default inferred)");
    app.add_option("--model", cfg.model, "mobius | einstein")
        ->envname("GYR_MODEL")
        ->check(CLI::IsMember({"mobius", "einstein"}));
    app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "sampling seed (default 0)");
    app.add_option("--tol", cfg.tol, "identity tolerance (default 1e-9)")->envname("GYR_TOL");

    std::string arg_u, arg_v, arg_z, arg_kind, arg_input = "-";
    double arg_r = 1.0, arg_t0 = 0.0, arg_t1 = 1.0;
    int arg_samples = 64, audit_samples = 1000;

    auto* c_add = app.add_subcommand("add", "u ⊕ v in the chosen model");
    c_add->add_option("u", arg_u)->required();
    c_add->add_option("v", arg_v)->required();

    auto* c_coadd = app.add_subcommand("coadd", "u ⊞ v in the chosen model");
    c_coadd->add_option("u", arg_u)->required();
    c_coadd->add_option("v", arg_v)->required();

    auto* c_gyr = app.add_subcommand("gyr", "gyration gyr[a,b]z");
    c_gyr->add_option("a", arg_u)->required();
    c_gyr->add_option("b", arg_v)->required();
    c_gyr->add_option("z", arg_z)->required();

    auto* c_scalar = app.add_subcommand("scalar", "r ⊗ v");
    c_scalar->add_option("r", arg_r)->required();
    c_scalar->add_option("v", arg_u)->required();

    auto* c_gamma = app.add_subcommand("gamma", "gamma factor of v");
    c_gamma->add_option("v", arg_u)->required();

    auto* c_curve = app.add_subcommand("curve", "sample a gyroline or cogyroline");
    c_curve->add_option("kind", arg_kind, "gyroline | cogyroline")->required();
    c_curve->add_option("A", arg_u)->required();
    c_curve->add_option("B", arg_v)->required();
    c_curve->add_option("--samples", arg_samples, "number of steps (emits N+1 rows)");
    c_curve->add_option("--t0", arg_t0, "start parameter (default 0)");
    c_curve->add_option("--t1", arg_t1, "end parameter (default 1)");

    auto* c_audit = app.add_subcommand("audit", "audit the gyrogroup identities");
    c_audit->add_option("--samples", audit_samples, "random samples (default 1000)");

    auto* c_invmass = app.add_subcommand("invmass", "invariant mass of a particle system");
    c_invmass->add_option("--input", arg_input, "JSON file, or - for stdin");

    auto* c_aberrate = app.add_subcommand("aberrate", "classical vs relativistic aberration");
    c_aberrate->add_option("u", arg_u, "particle velocity in frame S")->required();
    c_aberrate->add_option("v_obs", arg_v, "observer velocity relative to S")->required();

    auto* c_fidelity = app.add_subcommand("fidelity", "Bures fidelity of two Bloch vectors");
    c_fidelity->add_option("u", arg_u)->required();
    c_fidelity->add_option("v", arg_v)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.dim_given = dim_opt->count() > 0;

    try {
        if (c_add->parsed()) cmd_add(cfg, arg_u, arg_v);
        else if (c_coadd->parsed()) cmd_coadd(cfg, arg_u, arg_v);
        else if (c_gyr->parsed()) cmd_gyr(cfg, arg_u, arg_v, arg_z);
        else if (c_scalar->parsed()) cmd_scalar(cfg, arg_r, arg_u);
        else if (c_gamma->parsed()) cmd_gamma(cfg, arg_u);
        else if (c_curve->parsed()) cmd_curve(cfg, arg_kind, arg_u, arg_v, arg_samples, arg_t0, arg_t1);
        else if (c_audit->parsed()) return cmd_audit(cfg, audit_samples);
        else if (c_invmass->parsed()) cmd_invmass(cfg, arg_input);
        else if (c_aberrate->parsed()) cmd_aberrate(cfg, arg_u, arg_v);
        else if (c_fidelity->parsed()) cmd_fidelity(cfg, arg_u, arg_v);
    } catch (const gyro::GyroError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 0;
}
