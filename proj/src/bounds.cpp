#include "eigenbound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace eigenbound {

namespace {
constexpr double kPi = std::numbers::pi;

void require_dimension(int n) {
    if (n < 2) throw invalid_input("dimension n must be >= 2");
}

void require_nonnegative_k(double k) {
    if (!(k >= 0.0)) throw invalid_input("Ricci constant K must be >= 0");
}
}  // namespace

void GeometryData::validate() const {
    require_dimension(n);
    require_nonnegative_k(k);
    if (diameter && !(*diameter > 0.0))
        throw invalid_input("diameter d must be > 0");
    if (in_diameter && !(*in_diameter > 0.0))
        throw invalid_input("in-diameter d~ must be > 0");
    if (diameter && in_diameter && *in_diameter > *diameter)
        throw invalid_input("in-diameter d~ must not exceed diameter d");
}

std::string_view to_string(BoundName name) {
    switch (name) {
        case BoundName::reilly: return "reilly";
        case BoundName::zhong_yang: return "zhong_yang";
        case BoundName::yang: return "yang";
        case BoundName::ling: return "ling";
    }
    return "?";
}

double reilly_bound(int n, double k) {
    require_dimension(n);
    require_nonnegative_k(k);
    return static_cast<double>(n) * k;
}

double zhong_yang_bound(double diameter) {
    if (!(diameter > 0.0)) throw invalid_input("diameter d must be > 0");
    return kPi * kPi / (diameter * diameter);
}

double yang_bound(int n, double k, double in_diameter) {
    require_dimension(n);
    require_nonnegative_k(k);
    if (!(in_diameter > 0.0)) throw invalid_input("in-diameter d~ must be > 0");
    return 0.25 * (n - 1) * k + kPi * kPi / (in_diameter * in_diameter);
}

double ling_bound(int n, double k, double in_diameter) {
    require_dimension(n);
    require_nonnegative_k(k);
    if (!(in_diameter > 0.0)) throw invalid_input("in-diameter d~ must be > 0");
    return 0.5 * (n - 1) * k + kPi * kPi / (in_diameter * in_diameter);
}

BoundResult best_bound(const GeometryData& geometry) {
    geometry.validate();
    if (!geometry.diameter && !geometry.in_diameter)
        throw invalid_input("best_bound: neither diameter nor in-diameter given");

    std::vector<std::pair<BoundName, double>> candidates;
    candidates.emplace_back(BoundName::reilly, reilly_bound(geometry.n, geometry.k));
    if (geometry.diameter)
        candidates.emplace_back(BoundName::zhong_yang, zhong_yang_bound(*geometry.diameter));
    if (geometry.in_diameter) {
        candidates.emplace_back(BoundName::yang,
                                yang_bound(geometry.n, geometry.k, *geometry.in_diameter));
        candidates.emplace_back(BoundName::ling,
                                ling_bound(geometry.n, geometry.k, *geometry.in_diameter));
    }

    // Maximum with ties resolved to ling: scan, prefer the later ling entry
    // on equality.
    BoundResult best;
    bool first = true;
    for (const auto& [name, value] : candidates) {
        const bool wins = first || value > best.value ||
                          (value == best.value && name == BoundName::ling);
        if (wins) {
            best.name = name;
            best.value = value;
            first = false;
        }
    }
    best.hypotheses_met.positive_ricci = geometry.k > 0.0;
    return best;
}

DeltaInfo delta_of(double lambda, int n, double k) {
    require_dimension(n);
    require_nonnegative_k(k);
    if (!(lambda > 0.0)) throw invalid_input("delta_of: lambda must be > 0");
    DeltaInfo info;
    info.value = 0.5 * (n - 1) * k / lambda;
    info.limit = static_cast<double>(n - 1) / (2.0 * n);
    info.exceeds_limit = info.value > info.limit * (1.0 + 1e-12);
    return info;
}

}  // namespace eigenbound
