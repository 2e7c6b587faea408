#include "eigenbound/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace eigenbound {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_real(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    if (t.empty())
        throw invalid_input("config: empty value for '" + key + "'");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw invalid_input("config: '" + key + "' is not a number: " + t);
    return v;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw invalid_input("config: line " + std::to_string(line_no) +
                                " is not 'key = value': " + stripped);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw invalid_input("config: line " + std::to_string(line_no) +
                                " has an empty key");
        cfg.values_[key] = value;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input("config: cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

bool KeyValueConfig::has(const std::string& key) const {
    return values_.count(key) != 0;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) const {
    return get(key).value_or(fallback);
}

double KeyValueConfig::get_real(const std::string& key, double fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    return parse_real(key, *v);
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    const double real = parse_real(key, *v);
    const int as_int = static_cast<int>(real);
    if (static_cast<double>(as_int) != real)
        throw invalid_input("config: '" + key + "' must be an integer: " + *v);
    return as_int;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    const std::string t = trim(*v);
    if (t == "true" || t == "yes" || t == "1") return true;
    if (t == "false" || t == "no" || t == "0") return false;
    throw invalid_input("config: '" + key + "' is not a boolean: " + t);
}

std::vector<double> KeyValueConfig::get_reals(
    const std::string& key, std::vector<double> fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    std::vector<double> out;
    for (const std::string& part : split_commas(*v))
        out.push_back(parse_real(key, part));
    return out;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
    values_[key] = value;
}

ModelManifold model_from_config(const KeyValueConfig& config) {
    const auto kind = config.get(std::string("model"));
    if (!kind)
        throw invalid_input("config: missing 'model' "
                            "(cap | ball | interval | warped)");
    if (*kind == "cap") {
        return ModelManifold::spherical_cap(config.get_int("n", 2),
                                            config.get_real("K", 1.0),
                                            config.get_real("R", 1.0));
    }
    if (*kind == "ball") {
        return ModelManifold::euclidean_ball(config.get_int("n", 2),
                                             config.get_real("R", 1.0));
    }
    if (*kind == "interval") {
        return ModelManifold::interval(config.get_real("L", 1.0));
    }
    if (*kind == "warped") {
        WarpSpec spec;
        const std::string form = config.get_string("warp_form", "identity");
        if (form == "sin") {
            spec.form = WarpForm::sin_form;
        } else if (form == "sinh") {
            spec.form = WarpForm::sinh_form;
        } else if (form == "identity") {
            spec.form = WarpForm::identity;
        } else if (form == "polynomial") {
            spec.form = WarpForm::polynomial;
        } else {
            throw invalid_input("config: unknown warp_form: " + form);
        }
        spec.scale = config.get_real("warp_scale", 1.0);
        spec.coefficients = config.get_reals("warp_coefficients", {});
        return ModelManifold::warped_ball(config.get_int("n", 2), spec,
                                          config.get_real("R", 1.0));
    }
    throw invalid_input("config: unknown model kind: " + *kind);
}

SolverConfig solver_from_config(const KeyValueConfig& config) {
    SolverConfig solver;
    const std::string method = config.get_string("method", "shooting");
    if (method == "shooting") {
        solver.method = SolveMethod::shooting;
    } else if (method == "finite_difference" || method == "fd") {
        solver.method = SolveMethod::finite_difference;
    } else {
        throw invalid_input("config: unknown method: " + method);
    }
    solver.grid_points = config.get_int("grid", solver.grid_points);
    solver.tolerance = config.get_real("tol", solver.tolerance);
    if (config.has("pole_offset"))
        solver.pole_offset = config.get_real("pole_offset", 0.0);
    solver.validate();
    return solver;
}

VerifierConfig verifier_from_config(const KeyValueConfig& config) {
    VerifierConfig verifier;
    verifier.solver = solver_from_config(config);
    verifier.buckets = config.get_int("buckets", verifier.buckets);
    verifier.b_sequence = config.get_reals("b_sequence", verifier.b_sequence);
    verifier.force_hypotheses =
        config.get_bool("force_hypotheses", verifier.force_hypotheses);
    if (config.has("forced_delta"))
        verifier.forced_delta = config.get_real("forced_delta", 0.0);
    verifier.validate();
    return verifier;
}

std::vector<ModelManifold> sweep_models_from_config(
    const KeyValueConfig& config) {
    const std::string family = config.get_string("sweep_model", "cap");
    if (family != "cap" && family != "ball")
        throw invalid_input("config: sweep_model must be cap or ball");

    std::vector<int> dims;
    for (double v : config.get_reals("sweep_n", {2.0})) {
        const int n = static_cast<int>(v);
        if (static_cast<double>(n) != v)
            throw invalid_input("config: sweep_n entries must be integers");
        dims.push_back(n);
    }
    const std::vector<double> ks =
        family == "cap" ? config.get_reals("sweep_k", {1.0})
                        : std::vector<double>{0.0};

    std::vector<ModelManifold> models;
    for (int n : dims) {
        for (double k : ks) {
            std::vector<double> radii =
                config.get_reals("sweep_radii", {});
            if (radii.empty()) {
                const int count = config.get_int("sweep_r_count", 20);
                if (count < 1)
                    throw invalid_input("config: sweep_r_count must be >= 1");
                const double r_min = config.get_real("sweep_r_min", 0.1);
                double r_max;
                if (config.has("sweep_r_max")) {
                    r_max = config.get_real("sweep_r_max", 0.0);
                } else if (family == "cap") {
                    // Hemisphere radius: the largest cap whose boundary
                    // keeps nonnegative mean curvature.
                    r_max = std::numbers::pi / (2.0 * std::sqrt(k));
                } else {
                    r_max = 1.0;
                }
                if (!(r_max > r_min))
                    throw invalid_input(
                        "config: sweep radius range is empty");
                // Evenly spaced over (r_min, r_max]: excludes the degenerate
                // r_min end, includes the top radius. The last entry is
                // exactly r_max (no rounding drift past the hemisphere).
                for (int i = 1; i < count; ++i)
                    radii.push_back(r_min + (r_max - r_min) * i / count);
                radii.push_back(r_max);
            }
            for (double r : radii) {
                models.push_back(
                    family == "cap"
                        ? ModelManifold::spherical_cap(n, k, r)
                        : ModelManifold::euclidean_ball(n, r));
            }
        }
    }
    return models;
}

}  // namespace eigenbound
