#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eigenbound/model.hpp"
#include "eigenbound/verifier.hpp"

namespace eigenbound {

/// Flat `key = value` configuration text: one pair per line, `#` starts a
/// comment, blank lines are ignored, later duplicates win. All lookups that
/// parse a value throw invalid_input naming the offending key, so malformed
/// files surface as input errors (CLI exit 2), never as crashes.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig parse_string(const std::string& text);
    static KeyValueConfig parse_file(const std::string& path);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;

    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    double get_real(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    /// Comma-separated list of reals.
    std::vector<double> get_reals(const std::string& key,
                                  std::vector<double> fallback) const;

    const std::map<std::string, std::string>& entries() const {
        return values_;
    }

    /// Insert or overwrite one pair; how CLI flags override file values.
    void set(const std::string& key, const std::string& value);

private:
    std::map<std::string, std::string> values_;
};

/// Model keys: `model` = cap | ball | interval | warped, with `n`, `K`, `R`,
/// `L`, `warp_form` (sin | sinh | identity | polynomial), `warp_scale`,
/// `warp_coefficients` as needed per kind.
ModelManifold model_from_config(const KeyValueConfig& config);

/// Solver keys: `method` (shooting | finite_difference), `grid`, `tol`,
/// `pole_offset`.
SolverConfig solver_from_config(const KeyValueConfig& config);

/// Verifier keys: the solver keys plus `buckets`, `b_sequence`
/// (comma-separated), `force_hypotheses`, `forced_delta`.
VerifierConfig verifier_from_config(const KeyValueConfig& config);

/// Sweep keys: `sweep_model` (cap | ball), `sweep_n`, `sweep_k`
/// (comma-separated lists), and either an explicit `sweep_radii` list or
/// `sweep_r_count` radii evenly spaced over (`sweep_r_min`, r_max], where
/// r_max is `sweep_r_max` or, for caps, the hemisphere radius pi/(2 sqrt K).
std::vector<ModelManifold> sweep_models_from_config(
    const KeyValueConfig& config);

}  // namespace eigenbound
