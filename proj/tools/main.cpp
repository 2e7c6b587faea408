// eigenbound command-line front end.
//
// Subcommands: bounds | verify-xi | solve | verify | sweep. Every numeric
// flag is carried as text and routed through the same key=value
// configuration layer that reads config files, so a flag given on the
// command line simply overrides the corresponding file key and all input
// validation lives in one place.
//
// Exit codes: 0 = every check passed or was skipped, 1 = a mathematical
// check failed (or the solver did), 2 = invalid input.

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "eigenbound/config.hpp"
#include "eigenbound/report.hpp"

namespace {

using namespace eigenbound;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

/// Values of every recognized flag, shared across subcommands; only the
/// parsed subcommand's options are ever overlaid onto the configuration.
struct Args {
    std::string config_path;
    std::string output_path;
    std::string format;

    std::string model, n, k, radius, length, dtilde, diameter;
    std::string method, grid, tol, buckets, b_sequence;
    bool force_hypotheses = false;
};

/// One flag -> config-key overlay rule. `opt->count() > 0` means the user
/// typed the flag explicitly, which beats any config-file value.
struct Binding {
    CLI::Option* opt = nullptr;
    const char* key = nullptr;
    const std::string* slot = nullptr;
    bool is_flag = false;
};

std::string normalize_format(std::string format, const char* fallback) {
    if (format.empty()) format = fallback;
    if (format == "structured-report" || format == "text") format = "report";
    if (format != "csv" && format != "report")
        throw invalid_input("format: expected csv or report, got: " + format);
    return format;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw invalid_input("output: cannot write file: " + output_path);
    out << text;
}

std::string solution_summary(const ModelManifold& model,
                             const RadialEigenSolution& solution) {
    std::string out;
    out += "model: " + model.label() + "\n";
    out += "lambda: " + format_real(solution.lambda) + "\n";
    out += "d_tilde: " + format_real(solution.d_tilde) + "\n";
    out += "method: " + std::string(to_string(solution.method)) + "\n";
    out += "grid: " + std::to_string(solution.r_grid.size()) + "\n";
    return out;
}

int run_bounds(const KeyValueConfig& cfg, const Args& args) {
    const std::string format = normalize_format(args.format, "report");
    if (format != "report")
        throw invalid_input("bounds: only the report format is available");
    GeometryData geometry;
    geometry.n = cfg.get_int("n", 2);
    geometry.k = cfg.get_real("K", 0.0);
    if (cfg.has("d")) geometry.diameter = cfg.get_real("d", 0.0);
    if (cfg.has("dtilde")) geometry.in_diameter = cfg.get_real("dtilde", 0.0);
    emit(bounds_report(geometry), args.output_path);
    return kExitPass;
}

int run_verify_xi(const KeyValueConfig& cfg, const Args& args) {
    const std::string format = normalize_format(args.format, "report");
    const int grid = cfg.get_int("grid", 10001);
    const double tol = cfg.get_real("tol", 1e-9);
    const XiReport report = lemma5_property_suite(grid, tol);
    emit(format == "csv" ? to_csv(report) : to_text(report),
         args.output_path);
    return report.all_passed() ? kExitPass : kExitCheckFailed;
}

int run_solve(const KeyValueConfig& cfg, const Args& args) {
    const std::string format = normalize_format(args.format, "csv");
    const ModelManifold model = model_from_config(cfg);
    const std::string method = cfg.get_string("method", "shooting");

    std::vector<RadialEigenSolution> solutions;
    if (method == "both") {
        KeyValueConfig base = cfg;
        base.set("method", "shooting");
        const SolverConfig solver = solver_from_config(base);
        solutions.push_back(solve_shooting(model, solver));
        solutions.push_back(solve_finite_difference(model, solver));
    } else {
        solutions.push_back(solve(model, solver_from_config(cfg)));
    }

    std::string text;
    for (const RadialEigenSolution& s : solutions)
        text += format == "csv" ? to_csv(s) : solution_summary(model, s);
    emit(text, args.output_path);
    return kExitPass;
}

int run_verify(const KeyValueConfig& cfg, const Args& args) {
    const std::string format = normalize_format(args.format, "report");
    if (format != "report")
        throw invalid_input("verify: only the report format is available");
    const ModelManifold model = model_from_config(cfg);
    const VerifierConfig verifier = verifier_from_config(cfg);
    const VerificationReport report = verify_model(model, verifier);
    emit(to_text(report), args.output_path);
    return report.all_passed() ? kExitPass : kExitCheckFailed;
}

int run_sweep(const KeyValueConfig& cfg, const Args& args) {
    const std::string format = normalize_format(args.format, "csv");
    const std::vector<ModelManifold> models = sweep_models_from_config(cfg);
    const VerifierConfig verifier = verifier_from_config(cfg);
    const SweepTable table = sweep(models, verifier);
    // The table is written before the exit status is decided, so a failing
    // sweep still leaves the full table behind for inspection.
    emit(format == "csv" ? to_csv(table) : to_text(table), args.output_path);
    return table.all_passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "eigenbound: lower bounds for the first Dirichlet eigenvalue of "
        "rotationally symmetric model manifolds"};
    app.require_subcommand(1);

    Args args;
    std::vector<Binding> bindings;

    auto opt = [&bindings](CLI::App* cmd, const char* flag, std::string& slot,
                           const char* key, const char* desc) {
        bindings.push_back(
            Binding{cmd->add_option(flag, slot, desc), key, &slot, false});
    };
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path,
                        "key = value configuration file; explicit flags "
                        "override its entries");
        cmd->add_option("--output", args.output_path,
                        "write the result here instead of stdout");
        cmd->add_option("--format", args.format, "csv | report");
    };

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Closed-form lower bounds from the geometric data");
    opt(bounds, "--n", args.n, "n", "dimension (>= 2)");
    opt(bounds, "--K", args.k, "K", "Ricci lower-bound constant");
    opt(bounds, "--d", args.diameter, "d", "diameter");
    opt(bounds, "--dtilde", args.dtilde, "dtilde",
        "in-diameter d~ = 2 max distance to the boundary");
    common(bounds);

    CLI::App* verify_xi = app.add_subcommand(
        "verify-xi", "Check every property of the barrier function xi");
    opt(verify_xi, "--grid,--samples", args.grid, "grid",
        "symmetric grid size (odd >= 101; default 10001)");
    opt(verify_xi, "--tol", args.tol, "tol",
        "residual tolerance (default 1e-9)");
    common(verify_xi);

    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "Solve the radial eigenvalue problem for a model");
    CLI::App* verify = app.add_subcommand(
        "verify", "Solve a model, then check every estimate against it");
    for (CLI::App* cmd : {solve_cmd, verify}) {
        opt(cmd, "--model", args.model, "model",
            "cap | ball | interval | warped");
        opt(cmd, "--n", args.n, "n", "dimension");
        opt(cmd, "--K", args.k, "K", "curvature of a spherical cap");
        opt(cmd, "--R", args.radius, "R", "ball radius");
        opt(cmd, "--L", args.length, "L", "interval length");
        opt(cmd, "--grid", args.grid, "grid",
            "solver grid points (default 4096)");
        opt(cmd, "--tol", args.tol, "tol",
            "eigenvalue tolerance (default 1e-10)");
        common(cmd);
    }
    opt(solve_cmd, "--method", args.method, "method",
        "shooting | finite_difference | both");
    opt(verify, "--method", args.method, "method",
        "shooting | finite_difference");
    opt(verify, "--buckets", args.buckets, "buckets",
        "arcsin buckets for the barrier comparison (default 64)");
    opt(verify, "--b-sequence", args.b_sequence, "b_sequence",
        "comma-separated b > 1 values (default 1.01,1.001,1.0001)");
    bindings.push_back(Binding{
        verify->add_flag("--force-hypotheses", args.force_hypotheses,
                         "run gated checks even when hypotheses fail"),
        "force_hypotheses", nullptr, true});

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Verify a family of models and emit the comparison table");
    opt(sweep_cmd, "--grid", args.grid, "grid", "solver grid points");
    opt(sweep_cmd, "--tol", args.tol, "tol", "eigenvalue tolerance");
    opt(sweep_cmd, "--buckets", args.buckets, "buckets", "arcsin buckets");
    opt(sweep_cmd, "--b-sequence", args.b_sequence, "b_sequence",
        "comma-separated b > 1 values");
    opt(sweep_cmd, "--method", args.method, "method",
        "shooting | finite_difference");
    bindings.push_back(Binding{
        sweep_cmd->add_flag("--force-hypotheses", args.force_hypotheses,
                            "run gated checks even when hypotheses fail"),
        "force_hypotheses", nullptr, true});
    common(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        KeyValueConfig cfg;
        if (!args.config_path.empty())
            cfg = KeyValueConfig::parse_file(args.config_path);
        for (const Binding& b : bindings)
            if (b.opt->count() > 0)
                cfg.set(b.key, b.is_flag ? "true" : *b.slot);

        if (bounds->parsed()) return run_bounds(cfg, args);
        if (verify_xi->parsed()) return run_verify_xi(cfg, args);
        if (solve_cmd->parsed()) return run_solve(cfg, args);
        if (verify->parsed()) return run_verify(cfg, args);
        if (sweep_cmd->parsed()) return run_sweep(cfg, args);
        std::cerr << "error: no subcommand selected\n";
        return kExitInputError;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
