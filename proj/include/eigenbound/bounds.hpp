#pragma once

#include <optional>
#include <string_view>

#include "eigenbound/errors.hpp"

namespace eigenbound {

/// Geometric data of a compact manifold with boundary, as consumed by the
/// closed-form lower bounds for the first Dirichlet eigenvalue:
///   n        dimension (>= 2)
///   k        Ricci lower-bound constant: Ric >= (n-1)K. Passed as K itself,
///            the formulas form (n-1)K internally.
///   diameter        d, optional
///   in_diameter     d~ = 2 sup_x dist(x, boundary), optional
struct GeometryData {
    int n = 2;
    double k = 0.0;
    std::optional<double> diameter;
    std::optional<double> in_diameter;

    /// Throws invalid_input on n < 2, K < 0, nonpositive lengths, or d~ > d.
    void validate() const;
};

enum class BoundName { reilly, zhong_yang, yang, ling };

std::string_view to_string(BoundName name);

/// Hypothesis bookkeeping attached to a bound value. K = 0 is accepted by the
/// formulas (several degenerate to pi^2/d^2) but is recorded here as a
/// violation of the positive-curvature hypothesis rather than an error.
/// Boundary mean curvature is unknown at this level; the flag stays unset
/// unless a caller supplies it.
struct HypothesisFlags {
    bool positive_ricci = false;
    std::optional<bool> boundary_mean_curvature_nonnegative;
};

struct BoundResult {
    BoundName name = BoundName::ling;
    double value = 0.0;
    HypothesisFlags hypotheses_met;
};

/// lambda >= n K   (Lichnerowicz-Reilly)
double reilly_bound(int n, double k);

/// lambda >= pi^2 / d^2   (Li-Yau / Zhong-Yang)
double zhong_yang_bound(double diameter);

/// lambda >= (1/4)(n-1)K + pi^2 / d~^2
double yang_bound(int n, double k, double in_diameter);

/// lambda >= (1/2)(n-1)K + pi^2 / d~^2
double ling_bound(int n, double k, double in_diameter);

/// Largest applicable bound for the given geometry; ties resolve to ling.
/// Throws invalid_input when neither d nor d~ is present (with K possibly 0,
/// no formula would apply).
BoundResult best_bound(const GeometryData& geometry);

/// delta = alpha / lambda with alpha = (1/2)(n-1)K, together with the range
/// limit (n-1)/(2n) that holds whenever lambda >= nK.
struct DeltaInfo {
    double value = 0.0;
    double limit = 0.0;          // (n-1)/(2n)
    bool exceeds_limit = false;  // signals lambda below the nK bound
};

DeltaInfo delta_of(double lambda, int n, double k);

}  // namespace eigenbound
