// Command-line harness: exact disk/ball solvers, parameter sweeps, shape
// verification, asymptotic counterexample reports, and the invariant suite.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 solver failure.
// JSON is the canonical output; CSV is a projection of the same record with
// 17-significant-digit numbers, so parsing it back is bit-exact.  Identical
// inputs produce byte-identical output (no clocks, no RNG).

#include "CLI11.hpp"

#include "robinext/asympt.hpp"
#include "robinext/diskext.hpp"
#include "robinext/fem2d.hpp"
#include "robinext/geometry.hpp"
#include "robinext/report.hpp"
#include "robinext/sl1d.hpp"
#include "robinext/validate.hpp"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using robinext::report::Json;
using robinext::report::Table;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOpts {
    std::string format; // "json", "csv", or empty for the command default
    std::string output; // file path, empty for stdout
};

std::string pick_format(const OutOpts& o, const char* fallback) {
    if (o.format.empty())
        return fallback;
    if (o.format != "json" && o.format != "csv")
        throw UsageError("unknown format '" + o.format + "' (expected json or csv)");
    return o.format;
}

void emit(const OutOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file '" + o.output + "'");
    f << text;
    if (!f)
        throw std::runtime_error("failed writing output file '" + o.output + "'");
}

std::size_t sweep_threads(std::size_t points) {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ROBIN_LAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            n = static_cast<std::size_t>(v);
    }
    return std::min(n, std::max<std::size_t>(1, points));
}

// --- disk ---------------------------------------------------------------

int run_disk(double alpha, double R, const OutOpts& out) {
    const auto sol = robinext::diskext::solve_disk_exterior_2d(alpha, R);
    const auto [lo, hi] = robinext::diskext::bounds_2d(alpha, R);
    const double dR = robinext::diskext::dlambda_dR(alpha, R);
    const double da = robinext::diskext::dlambda_dalpha_disk(alpha, R);
    if (pick_format(out, "json") == "json") {
        Json rec;
        rec["command"] = "disk";
        rec["alpha"] = alpha;
        rec["R"] = R;
        rec["lambda"] = sol.lambda;
        rec["k"] = sol.k;
        rec["lower_bound"] = lo;
        rec["upper_bound"] = hi;
        rec["dlambda_dR"] = dR;
        rec["dlambda_dalpha"] = da;
        rec["residual"] = sol.residual;
        emit(out, rec.dump(2) + "\n");
    } else {
        Table t;
        t.columns = {"alpha", "R",           "lambda",         "k",       "lower_bound",
                     "upper_bound", "dlambda_dR", "dlambda_dalpha", "residual"};
        t.rows = {{alpha, R, sol.lambda, sol.k, lo, hi, dR, da, sol.residual}};
        emit(out, robinext::report::to_csv(t));
    }
    return 0;
}

// --- sweep --------------------------------------------------------------

struct SweepOpts {
    std::string param; // "alpha" or "R"
    double from = 0.0, to = 0.0;
    std::size_t points = 50;
    double alpha = -1.0; // fixed value when sweeping R
    double R = 1.0;      // fixed value when sweeping alpha
};

Table sweep_table(const SweepOpts& s) {
    if (s.param != "alpha" && s.param != "R")
        throw UsageError("sweep parameter must be alpha or R, got '" + s.param + "'");
    if (s.points < 2)
        throw UsageError("sweep needs at least 2 points, got " + std::to_string(s.points));
    const bool overAlpha = s.param == "alpha";

    Table t;
    t.columns = {s.param, "lambda", "lower_bound", "upper_bound", "derivative"};
    t.rows.assign(s.points, {});

    std::exception_ptr firstError;
    std::mutex errMutex;
    const std::size_t nw = sweep_threads(s.points);
    std::vector<std::thread> workers;
    workers.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        workers.emplace_back([&, w]() {
            for (std::size_t i = w; i < s.points; i += nw) {
                try {
                    const double v =
                        s.from + (s.to - s.from) * static_cast<double>(i) /
                                     static_cast<double>(s.points - 1);
                    const double alpha = overAlpha ? v : s.alpha;
                    const double R = overAlpha ? s.R : v;
                    const auto sol = robinext::diskext::solve_disk_exterior_2d(alpha, R);
                    const auto [lo, hi] = robinext::diskext::bounds_2d(alpha, R);
                    const double deriv = overAlpha
                                             ? robinext::diskext::dlambda_dalpha_disk(alpha, R)
                                             : robinext::diskext::dlambda_dR(alpha, R);
                    t.rows[i] = {v, sol.lambda, lo, hi, deriv};
                } catch (...) {
                    std::lock_guard<std::mutex> lock(errMutex);
                    if (!firstError)
                        firstError = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& w : workers)
        w.join();
    if (firstError)
        std::rethrow_exception(firstError);
    return t;
}

int run_sweep(const SweepOpts& s, const OutOpts& out) {
    const Table t = sweep_table(s);
    if (pick_format(out, "csv") == "csv") {
        emit(out, robinext::report::to_csv(t));
    } else {
        Json rec;
        rec["command"] = "sweep";
        rec["param"] = s.param;
        if (s.param == "alpha")
            rec["R"] = s.R;
        else
            rec["alpha"] = s.alpha;
        rec["points"] = s.points;
        rec["rows"] = robinext::report::table_to_json(t);
        emit(out, rec.dump(2) + "\n");
    }
    return 0;
}

// --- shape --------------------------------------------------------------

struct ShapeOpts {
    std::string name; // disk | ellipse | support-poly
    double R = 1.0;
    double a = 0.0, b = 0.0;
    std::vector<double> coeffs;
    double alpha = 0.0;
    std::size_t Ns = 64, Nt = 256, nTheta = 2048;
};

robinext::geometry::SupportFunction shape_support(const ShapeOpts& s) {
    if (s.name == "disk")
        return robinext::geometry::support_disk(s.R);
    if (s.name == "ellipse")
        return robinext::geometry::support_ellipse(s.a, s.b);
    if (s.name == "support-poly")
        return robinext::geometry::support_cosine_poly(s.coeffs);
    throw UsageError("unknown shape '" + s.name + "'");
}

Json shape_spec_json(const ShapeOpts& s) {
    Json spec;
    spec["name"] = s.name;
    if (s.name == "disk")
        spec["R"] = s.R;
    else if (s.name == "ellipse") {
        spec["a"] = s.a;
        spec["b"] = s.b;
    } else
        spec["coeffs"] = s.coeffs;
    return spec;
}

int run_shape(const ShapeOpts& s, const OutOpts& out) {
    if (s.Ns == 0 || s.Nt == 0 || s.nTheta == 0)
        throw UsageError("mesh overrides must be positive");
    const auto curve = robinext::geometry::curve_from_support(shape_support(s), s.nTheta);
    const auto rep = robinext::fem2d::verify_theorem(curve, s.alpha, s.Ns, s.Nt);
    if (pick_format(out, "json") == "json") {
        Json rec;
        rec["command"] = "shape";
        rec["shape"] = shape_spec_json(s);
        rec["alpha"] = s.alpha;
        rec["Ns"] = s.Ns;
        rec["Nt"] = s.Nt;
        rec["ntheta"] = s.nTheta;
        rec["perimeter"] = rep.perimeter;
        rec["area"] = rep.area;
        rec["R1"] = rep.R1;
        rec["R2"] = rep.R2;
        rec["lambda_omega"] = rep.lambda_omega;
        rec["lambda_iso_disk"] = rep.lambda_iso;
        rec["lambda_icho_disk"] = rep.lambda_icho;
        rec["margin_iso"] = rep.margin_iso;
        rec["margin_icho"] = rep.margin_icho;
        rec["mesh_error_estimate"] = rep.mesh_error_estimate;
        rec["passed"] = rep.passed;
        rec["counterevidence"] = rep.counterevidence;
        emit(out, rec.dump(2) + "\n");
    } else {
        Table t;
        t.columns = {"perimeter",     "area",        "R1",
                     "R2",            "lambda_omega", "lambda_iso_disk",
                     "lambda_icho_disk", "margin_iso",  "margin_icho",
                     "mesh_error_estimate", "passed"};
        t.rows = {{rep.perimeter, rep.area, rep.R1, rep.R2, rep.lambda_omega, rep.lambda_iso,
                   rep.lambda_icho, rep.margin_iso, rep.margin_icho, rep.mesh_error_estimate,
                   rep.passed ? 1.0 : 0.0}};
        emit(out, robinext::report::to_csv(t));
    }
    return 0;
}

// --- counterexample -----------------------------------------------------

int run_cx_2d(double alpha, double r3, const OutOpts& out) {
    const auto rep = robinext::asympt::two_disks_2d(alpha, r3);
    if (pick_format(out, "json") == "json") {
        Json rec;
        rec["command"] = "counterexample";
        rec["kind"] = "2d";
        rec["alpha"] = rep.alpha;
        rec["r3"] = rep.r3;
        rec["R1"] = rep.R1;
        rec["R2"] = rep.R2;
        rec["lambda_asym"] = rep.lambda_asym;
        rec["lambda_disk_R1"] = rep.lambda_disk_R1;
        rec["lambda_disk_R2"] = rep.lambda_disk_R2;
        rec["asymptotic_regime"] = rep.asymptotic_regime;
        rec["reversed_iso"] = rep.reversed_iso;
        rec["reversed_icho"] = rep.reversed_icho;
        rec["crossover_alpha"] = rep.crossover_alpha;
        emit(out, rec.dump(2) + "\n");
    } else {
        Table t;
        t.columns = {"alpha",          "r3",           "R1",
                     "R2",             "lambda_asym",  "lambda_disk_R1",
                     "lambda_disk_R2", "asymptotic_regime", "reversed_iso",
                     "reversed_icho",  "crossover_alpha"};
        t.rows = {{rep.alpha, rep.r3, rep.R1, rep.R2, rep.lambda_asym, rep.lambda_disk_R1,
                   rep.lambda_disk_R2, rep.asymptotic_regime ? 1.0 : 0.0,
                   rep.reversed_iso ? 1.0 : 0.0, rep.reversed_icho ? 1.0 : 0.0,
                   rep.crossover_alpha}};
        emit(out, robinext::report::to_csv(t));
    }
    return 0;
}

int run_cx_3d(double alpha, double r, double R, const OutOpts& out) {
    const auto rep = robinext::asympt::hull_3d(alpha, r, R);
    if (pick_format(out, "json") == "json") {
        Json rec;
        rec["command"] = "counterexample";
        rec["kind"] = "3d";
        rec["alpha"] = rep.alpha;
        rec["r"] = rep.r;
        rec["R"] = rep.R;
        rec["asym_hull"] = rep.asym_hull;
        rec["asym_ball"] = rep.asym_ball;
        rec["criterion"] = rep.criterion;
        rec["reversed"] = rep.reversed;
        rec["L_axis_area"] = rep.L_axis_area;
        rec["L_axis_volume"] = rep.L_axis_volume;
        emit(out, rec.dump(2) + "\n");
    } else {
        Table t;
        t.columns = {"alpha",    "r",        "R",           "asym_hull",   "asym_ball",
                     "criterion", "reversed", "L_axis_area", "L_axis_volume"};
        t.rows = {{rep.alpha, rep.r, rep.R, rep.asym_hull, rep.asym_ball,
                   rep.criterion ? 1.0 : 0.0, rep.reversed ? 1.0 : 0.0, rep.L_axis_area,
                   rep.L_axis_volume}};
        emit(out, robinext::report::to_csv(t));
    }
    return 0;
}

// --- validate -----------------------------------------------------------

int run_validate(bool asJson, const OutOpts& out) {
    const auto results = robinext::validate::run_all_checks();
    std::size_t passed = 0;
    for (const auto& r : results)
        passed += r.passed ? 1 : 0;
    if (asJson) {
        Json rec;
        rec["command"] = "validate";
        rec["passed"] = passed == results.size();
        rec["checks"] = Json::array();
        for (const auto& r : results) {
            Json c;
            c["name"] = r.name;
            c["passed"] = r.passed;
            c["detail"] = r.detail;
            rec["checks"].push_back(std::move(c));
        }
        emit(out, rec.dump(2) + "\n");
    } else {
        std::size_t width = 0;
        for (const auto& r : results)
            width = std::max(width, r.name.size());
        std::ostringstream os;
        for (const auto& r : results)
            os << (r.passed ? "PASS " : "FAIL ") << r.name
               << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
        os << passed << "/" << results.size() << " checks passed\n";
        emit(out, os.str());
    }
    if (passed != results.size())
        throw std::runtime_error(std::to_string(results.size() - passed) +
                                 " invariant check(s) failed");
    return 0;
}

// --- config file --------------------------------------------------------

double need_num(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw UsageError("config: missing or non-numeric field '" + key + "'");
    return j.at(key).get<double>();
}

double opt_num(const Json& j, const std::string& key, double fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number())
        throw UsageError("config: non-numeric field '" + key + "'");
    return j.at(key).get<double>();
}

std::size_t opt_size(const Json& j, const std::string& key, std::size_t fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number_integer() || j.at(key).get<long long>() <= 0)
        throw UsageError("config: field '" + key + "' must be a positive integer");
    return j.at(key).get<std::size_t>();
}

int run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot open config file '" + path + "'");
    Json cfg;
    try {
        cfg = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!cfg.is_object() || !cfg.contains("command") || !cfg.at("command").is_string())
        throw UsageError("config: expected an object with a 'command' string");

    OutOpts out;
    if (cfg.contains("format"))
        out.format = cfg.at("format").get<std::string>();
    if (cfg.contains("output"))
        out.output = cfg.at("output").get<std::string>();

    const std::string command = cfg.at("command").get<std::string>();
    if (command == "disk")
        return run_disk(need_num(cfg, "alpha"), need_num(cfg, "R"), out);
    if (command == "sweep") {
        SweepOpts s;
        if (!cfg.contains("param") || !cfg.at("param").is_string())
            throw UsageError("config: sweep needs a 'param' string (alpha or R)");
        s.param = cfg.at("param").get<std::string>();
        s.from = need_num(cfg, "from");
        s.to = need_num(cfg, "to");
        s.points = opt_size(cfg, "points", 50);
        s.alpha = opt_num(cfg, "alpha", -1.0);
        s.R = opt_num(cfg, "R", 1.0);
        return run_sweep(s, out);
    }
    if (command == "shape") {
        if (!cfg.contains("shape") || !cfg.at("shape").is_object() ||
            !cfg.at("shape").contains("name"))
            throw UsageError("config: shape needs a 'shape' object with a 'name'");
        const Json& spec = cfg.at("shape");
        ShapeOpts s;
        s.name = spec.at("name").get<std::string>();
        if (s.name == "disk")
            s.R = need_num(spec, "R");
        else if (s.name == "ellipse") {
            s.a = need_num(spec, "a");
            s.b = need_num(spec, "b");
        } else if (s.name == "support-poly") {
            if (!spec.contains("coeffs") || !spec.at("coeffs").is_array())
                throw UsageError("config: support-poly needs a 'coeffs' array");
            s.coeffs = spec.at("coeffs").get<std::vector<double>>();
        } else
            throw UsageError("config: unknown shape '" + s.name + "'");
        s.alpha = need_num(cfg, "alpha");
        s.Ns = opt_size(cfg, "Ns", 64);
        s.Nt = opt_size(cfg, "Nt", 256);
        s.nTheta = opt_size(cfg, "ntheta", 2048);
        return run_shape(s, out);
    }
    if (command == "counterexample") {
        if (!cfg.contains("kind") || !cfg.at("kind").is_string())
            throw UsageError("config: counterexample needs a 'kind' string (2d or 3d)");
        const std::string kind = cfg.at("kind").get<std::string>();
        if (kind == "2d")
            return run_cx_2d(opt_num(cfg, "alpha", -50.0), need_num(cfg, "r3"), out);
        if (kind == "3d")
            return run_cx_3d(opt_num(cfg, "alpha", -100.0), need_num(cfg, "r"),
                             need_num(cfg, "R"), out);
        throw UsageError("config: unknown counterexample kind '" + kind + "'");
    }
    if (command == "validate")
        return run_validate(cfg.contains("json") && cfg.at("json").get<bool>(), out);
    throw UsageError("config: unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lowest Robin eigenvalue in the exterior of convex bodies: exact disk/ball "
                 "kernels, reduced 1D bounds, a 2D finite element solver, and asymptotic "
                 "counterexample reports"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string configPath;
    app.add_option("--config", configPath, "JSON run configuration (alternative to a subcommand)");
    OutOpts out;
    app.add_option("--format", out.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", out.output, "Write output to this file instead of stdout");

    // disk
    auto* diskCmd = app.add_subcommand("disk", "Exact lowest eigenvalue outside a disk");
    diskCmd->fallthrough();
    double diskAlpha = 0.0, diskR = 0.0;
    diskCmd->add_option("--alpha", diskAlpha, "Boundary parameter (negative)")->required();
    diskCmd->add_option("--R", diskR, "Disk radius")->required();

    // sweep
    auto* sweepCmd = app.add_subcommand("sweep", "Sweep alpha or R for the disk exterior");
    sweepCmd->fallthrough();
    SweepOpts sweep;
    sweepCmd->add_option("--param", sweep.param, "Swept parameter: alpha or R")
        ->required()
        ->check(CLI::IsMember({"alpha", "R"}));
    sweepCmd->add_option("--from", sweep.from, "Range start")->required();
    sweepCmd->add_option("--to", sweep.to, "Range end")->required();
    sweepCmd->add_option("--points", sweep.points, "Number of points (>= 2)")
        ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));
    sweepCmd->add_option("--alpha", sweep.alpha, "Fixed alpha when sweeping R (default -1)");
    sweepCmd->add_option("--R", sweep.R, "Fixed radius when sweeping alpha (default 1)");

    // shape
    auto* shapeCmd = app.add_subcommand(
        "shape", "Verify the disk maximizer property for a convex shape (2D solver)");
    shapeCmd->fallthrough();
    shapeCmd->require_subcommand(1);
    ShapeOpts shape;
    shapeCmd->add_option("--alpha", shape.alpha, "Boundary parameter (negative)")->required();
    shapeCmd->add_option("--Ns", shape.Ns, "Angular node count (default 64)");
    shapeCmd->add_option("--Nt", shape.Nt, "Normal-direction node count (default 256)");
    shapeCmd->add_option("--ntheta", shape.nTheta, "Support sampling resolution (default 2048)");
    auto* shapeDisk = shapeCmd->add_subcommand("disk", "Disk of radius R");
    shapeDisk->fallthrough();
    shapeDisk->add_option("--R", shape.R, "Radius")->required();
    auto* shapeEllipse = shapeCmd->add_subcommand("ellipse", "Ellipse with semi-axes a, b");
    shapeEllipse->fallthrough();
    shapeEllipse->add_option("--a", shape.a, "Semi-axis a")->required();
    shapeEllipse->add_option("--b", shape.b, "Semi-axis b")->required();
    auto* shapePoly = shapeCmd->add_subcommand(
        "support-poly", "Support function h = c0 + sum c_n cos(n theta)");
    shapePoly->fallthrough();
    shapePoly->add_option("--coeffs", shape.coeffs, "Cosine coefficients c0,c1,...")
        ->required()
        ->delimiter(',');

    // counterexample
    auto* cxCmd = app.add_subcommand("counterexample",
                                     "Strong-coupling reversal reports (asymptotic models)");
    cxCmd->fallthrough();
    cxCmd->require_subcommand(1);
    double cx2Alpha = -50.0, cx2r3 = 0.0;
    auto* cx2 = cxCmd->add_subcommand("2d", "Two equal disks vs. the matched single disk");
    cx2->fallthrough();
    cx2->add_option("--r3", cx2r3, "Radius of each of the two disks")->required();
    cx2->add_option("--alpha", cx2Alpha, "Boundary parameter (default -50)");
    double cx3Alpha = -100.0, cx3r = 0.0, cx3R = 0.0;
    auto* cx3 = cxCmd->add_subcommand("3d", "Spherocylinder hull vs. the ball");
    cx3->fallthrough();
    cx3->add_option("--r", cx3r, "Cap radius of the hull")->required();
    cx3->add_option("--R", cx3R, "Ball radius")->required();
    cx3->add_option("--alpha", cx3Alpha, "Boundary parameter (default -100)");

    // validate
    auto* valCmd = app.add_subcommand("validate", "Run the full invariant suite");
    valCmd->fallthrough();
    bool valJson = false;
    valCmd->add_flag("--json", valJson, "Machine-readable results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!configPath.empty()) {
            if (app.get_subcommands().size() > 0)
                throw UsageError("--config cannot be combined with a subcommand");
            return run_config(configPath);
        }
        if (diskCmd->parsed())
            return run_disk(diskAlpha, diskR, out);
        if (sweepCmd->parsed())
            return run_sweep(sweep, out);
        if (shapeCmd->parsed()) {
            if (shapeDisk->parsed())
                shape.name = "disk";
            else if (shapeEllipse->parsed())
                shape.name = "ellipse";
            else
                shape.name = "support-poly";
            return run_shape(shape, out);
        }
        if (cxCmd->parsed()) {
            if (cx2->parsed())
                return run_cx_2d(cx2Alpha, cx2r3, out);
            return run_cx_3d(cx3Alpha, cx3r, cx3R, out);
        }
        if (valCmd->parsed())
            return run_validate(valJson, out);
        std::cerr << app.help() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
