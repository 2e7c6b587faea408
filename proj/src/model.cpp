#include "eigenbound/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <utility>

namespace eigenbound {

namespace detail {

/// Natural cubic spline through strictly increasing knots.
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)), m_(x_.size(), 0.0) {
        const std::size_t n = x_.size();
        if (n < 3) throw invalid_input("cubic spline needs at least 3 samples");
        // Tridiagonal system for interior second derivatives (natural ends).
        std::vector<double> diag(n, 2.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double hl = x_[i] - x_[i - 1];
            const double hr = x_[i + 1] - x_[i];
            sub[i] = hl / (hl + hr);
            sup[i] = hr / (hl + hr);
            rhs[i] = 6.0 / (hl + hr) *
                     ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
        }
        // Thomas elimination on rows 1 .. n-2; m_[0] = m_[n-1] = 0.
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            const double upper = (i + 2 < n) ? sup[i] * m_[i + 1] : 0.0;
            m_[i] = (rhs[i] - upper) / diag[i];
            if (i == 1) break;
        }
    }

    double value(double x) const {
        const auto [i, dl, dr, h] = locate(x);
        return m_[i] * dr * dr * dr / (6.0 * h) +
               m_[i + 1] * dl * dl * dl / (6.0 * h) +
               (y_[i] / h - m_[i] * h / 6.0) * dr +
               (y_[i + 1] / h - m_[i + 1] * h / 6.0) * dl;
    }

    double derivative(double x) const {
        const auto [i, dl, dr, h] = locate(x);
        return -m_[i] * dr * dr / (2.0 * h) + m_[i + 1] * dl * dl / (2.0 * h) +
               (y_[i + 1] - y_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
    }

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }

private:
    struct Pos {
        std::size_t i;
        double dl, dr, h;
    };
    Pos locate(double x) const {
        const double xc = std::clamp(x, x_.front(), x_.back());
        auto it = std::upper_bound(x_.begin(), x_.end(), xc);
        std::size_t i = static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(it - x_.begin() - 1, 0,
                                       static_cast<std::ptrdiff_t>(x_.size()) - 2));
        return Pos{i, xc - x_[i], x_[i + 1] - xc, x_[i + 1] - x_[i]};
    }

    std::vector<double> x_, y_;
    std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace detail

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCurvatureGrid = 4096;

std::string format_label(const char* fmt, auto... args) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

void require_dimension_2(int n, const char* what) {
    if (n < 2) {
        throw invalid_input(format_label("%s: dimension n = %d must be >= 2",
                                         what, n));
    }
}

void require_positive(double v, const char* what, const char* field) {
    if (!(v > 0.0)) {
        throw invalid_input(format_label("%s: %s = %.17g must be > 0", what,
                                         field, v));
    }
}

}  // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::spherical_cap: return "spherical_cap";
        case ModelKind::euclidean_ball: return "euclidean_ball";
        case ModelKind::warped_ball: return "warped_ball";
        case ModelKind::interval: return "interval";
    }
    return "?";
}

ModelManifold ModelManifold::spherical_cap(int n, double k, double r) {
    ModelManifold m;
    m.kind = ModelKind::spherical_cap;
    m.n = n;
    m.k = k;
    m.radius = r;
    m.warp_spec.form = WarpForm::sin_form;
    m.warp_spec.scale = std::sqrt(std::max(k, 0.0));
    m.validate();
    return m;
}

ModelManifold ModelManifold::euclidean_ball(int n, double r) {
    ModelManifold m;
    m.kind = ModelKind::euclidean_ball;
    m.n = n;
    m.radius = r;
    m.warp_spec.form = WarpForm::identity;
    m.validate();
    return m;
}

ModelManifold ModelManifold::warped_ball(int n, WarpSpec warp, double r) {
    ModelManifold m;
    m.kind = ModelKind::warped_ball;
    m.n = n;
    m.radius = r;
    m.warp_spec = std::move(warp);
    if (m.warp_spec.form == WarpForm::sampled) {
        if (m.warp_spec.r_samples.size() != m.warp_spec.f_samples.size())
            throw invalid_input("warped_ball: sample vectors differ in length");
        m.sampled_warp = std::make_shared<const detail::CubicSpline>(
            m.warp_spec.r_samples, m.warp_spec.f_samples);
    }
    m.validate();
    return m;
}

ModelManifold ModelManifold::interval(double l) {
    ModelManifold m;
    m.kind = ModelKind::interval;
    m.n = 1;
    m.radius = 0.5 * l;
    m.warp_spec.form = WarpForm::identity;
    if (!(l > 0.0))
        throw invalid_input(format_label("interval: L = %.17g must be > 0", l));
    return m;
}

void ModelManifold::validate() const {
    switch (kind) {
        case ModelKind::interval:
            require_positive(radius, "interval", "L/2");
            return;
        case ModelKind::spherical_cap: {
            require_dimension_2(n, "spherical_cap");
            require_positive(k, "spherical_cap", "K");
            require_positive(radius, "spherical_cap", "R");
            const double limit = kPi / std::sqrt(k);
            if (!(radius < limit)) {
                throw invalid_input(format_label(
                    "spherical_cap: R = %.17g must be < pi/sqrt(K) = %.17g "
                    "(the warp vanishes there)", radius, limit));
            }
            return;
        }
        case ModelKind::euclidean_ball:
            require_dimension_2(n, "euclidean_ball");
            require_positive(radius, "euclidean_ball", "R");
            return;
        case ModelKind::warped_ball:
            break;
    }

    require_dimension_2(n, "warped_ball");
    require_positive(radius, "warped_ball", "R");
    const WarpSpec& w = warp_spec;
    switch (w.form) {
        case WarpForm::sin_form:
            require_positive(w.scale, "warped_ball", "scale");
            if (!(w.scale * radius < kPi))
                throw invalid_input(
                    "warped_ball: sin warp vanishes before the boundary "
                    "(need scale*R < pi)");
            break;
        case WarpForm::sinh_form:
            require_positive(w.scale, "warped_ball", "scale");
            break;
        case WarpForm::identity:
        case WarpForm::polynomial:
            break;
        case WarpForm::sampled: {
            if (!sampled_warp)
                throw invalid_input(
                    "warped_ball: sampled warp must be built by the factory");
            if (w.r_samples.size() < 3 ||
                !std::is_sorted(w.r_samples.begin(), w.r_samples.end()))
                throw invalid_input(
                    "warped_ball: samples must be increasing in r");
            if (std::abs(w.r_samples.front()) > 1e-12 ||
                std::abs(w.f_samples.front()) > 1e-12)
                throw invalid_input("warped_ball: samples must start at "
                                    "f(0) = 0 (smooth pole)");
            if (w.r_samples.back() < radius)
                throw invalid_input(
                    "warped_ball: samples must cover [0, R]");
            const double fp0 = sampled_warp->derivative(0.0);
            if (std::abs(fp0 - 1.0) > 1e-3) {
                throw invalid_input(format_label(
                    "warped_ball: sampled warp has f'(0) = %.6g, need 1 "
                    "(smooth pole)", fp0));
            }
            break;
        }
    }
    // Positivity of f on (0, R], sampled on a fine grid.
    for (int i = 1; i <= kCurvatureGrid; ++i) {
        const double r = radius * static_cast<double>(i) / kCurvatureGrid;
        if (!(warp(r) > 0.0)) {
            throw invalid_input(format_label(
                "warped_ball: warp is not positive at r = %.6g", r));
        }
    }
}

double ModelManifold::warp(double r) const {
    const WarpSpec& w = warp_spec;
    switch (w.form) {
        case WarpForm::sin_form:
            return std::sin(w.scale * r) / w.scale;
        case WarpForm::sinh_form:
            return std::sinh(w.scale * r) / w.scale;
        case WarpForm::identity:
            return r;
        case WarpForm::polynomial: {
            double sum = r;
            double p = r * r;
            for (double c : w.coefficients) {
                sum += c * p;
                p *= r;
            }
            return sum;
        }
        case WarpForm::sampled:
            return sampled_warp->value(r);
    }
    return r;
}

double ModelManifold::warp_derivative(double r) const {
    const WarpSpec& w = warp_spec;
    switch (w.form) {
        case WarpForm::sin_form:
            return std::cos(w.scale * r);
        case WarpForm::sinh_form:
            return std::cosh(w.scale * r);
        case WarpForm::identity:
            return 1.0;
        case WarpForm::polynomial: {
            double sum = 1.0;
            double p = r;
            double deg = 2.0;
            for (double c : w.coefficients) {
                sum += c * deg * p;
                p *= r;
                deg += 1.0;
            }
            return sum;
        }
        case WarpForm::sampled:
            return sampled_warp->derivative(r);
    }
    return 1.0;
}

double ModelManifold::warp_second_derivative(double r) const {
    const WarpSpec& w = warp_spec;
    switch (w.form) {
        case WarpForm::sin_form:
            return -w.scale * std::sin(w.scale * r);
        case WarpForm::sinh_form:
            return w.scale * std::sinh(w.scale * r);
        case WarpForm::identity:
            return 0.0;
        case WarpForm::polynomial: {
            double sum = 0.0;
            double p = 1.0;
            double deg = 2.0;
            for (double c : w.coefficients) {
                sum += c * deg * (deg - 1.0) * p;
                p *= r;
                deg += 1.0;
            }
            return sum;
        }
        case WarpForm::sampled: {
            // Central differences with a fixed step; the spline's native
            // second derivative is only piecewise linear.
            const double h = radius / kCurvatureGrid;
            const double lo = std::max(r - h, 0.0);
            const double hi = std::min(r + h, sampled_warp->back());
            const double mid = 0.5 * (lo + hi);
            const double hh = 0.5 * (hi - lo);
            if (!(hh > 0.0)) return 0.0;
            return (sampled_warp->value(mid + hh) - 2.0 * sampled_warp->value(mid) +
                    sampled_warp->value(mid - hh)) / (hh * hh);
        }
    }
    return 0.0;
}

std::string ModelManifold::label() const {
    switch (kind) {
        case ModelKind::spherical_cap:
            return format_label("cap(n=%d, K=%g, R=%g)", n, k, radius);
        case ModelKind::euclidean_ball:
            return format_label("ball(n=%d, R=%g)", n, radius);
        case ModelKind::warped_ball: {
            const char* form = "?";
            switch (warp_spec.form) {
                case WarpForm::sin_form: form = "sin"; break;
                case WarpForm::sinh_form: form = "sinh"; break;
                case WarpForm::identity: form = "identity"; break;
                case WarpForm::polynomial: form = "polynomial"; break;
                case WarpForm::sampled: form = "sampled"; break;
            }
            return format_label("warped(n=%d, form=%s, R=%g)", n, form, radius);
        }
        case ModelKind::interval:
            return format_label("interval(L=%g)", 2.0 * radius);
    }
    return "?";
}

double warp_log_derivative(const ModelManifold& model, double r) {
    if (!(r > 0.0))
        throw invalid_input("warp_log_derivative: r = 0 is the coordinate pole");
    if (!(r <= model.radius * (1.0 + 1e-12)))
        throw invalid_input("warp_log_derivative: r exceeds the model radius");
    if (model.n == 1) return 0.0;
    return (model.n - 1) * model.warp_derivative(r) / model.warp(r);
}

double ricci_lower(const ModelManifold& model) {
    switch (model.kind) {
        case ModelKind::interval:
            return 0.0;
        case ModelKind::spherical_cap:
            return model.k;
        case ModelKind::euclidean_ball:
            return 0.0;
        case ModelKind::warped_ball:
            break;
    }
    const WarpSpec& w = model.warp_spec;
    // Constant-curvature closed forms.
    if (w.form == WarpForm::sin_form) return w.scale * w.scale;
    if (w.form == WarpForm::sinh_form) return -w.scale * w.scale;
    if (w.form == WarpForm::identity) return 0.0;

    // General warp: scan radial and tangential Ricci/(n-1) over a fine grid.
    //   radial     -f''/f
    //   tangential [-f''/f + (n-2)(1 - f'^2)/f^2] / (n-1)
    const int n = model.n;
    auto curvature_at = [&](double r) {
        const double f = model.warp(r);
        const double fp = model.warp_derivative(r);
        const double fpp = model.warp_second_derivative(r);
        const double radial = -fpp / f;
        const double tangential =
            (-fpp / f + (n - 2) * (1.0 - fp * fp) / (f * f)) / (n - 1);
        return std::min(radial, tangential);
    };
    double inf = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= kCurvatureGrid; ++i) {
        const double r = model.radius * static_cast<double>(i) / kCurvatureGrid;
        inf = std::min(inf, curvature_at(r));
    }
    // A metric that is smooth at the pole has f odd in r, so f''(0) = 0; a
    // violation makes the curvature blow up like 1/r. Two probes approaching
    // the pole: a diverging ratio flags a non-smooth warp, which a single
    // magnitude cutoff would miss.
    const double probe_far = curvature_at(model.radius / 1024.0);
    const double probe_near = curvature_at(model.radius / 4096.0);
    const bool diverging = std::abs(probe_near) > 100.0 &&
                           std::abs(probe_near) > 2.5 * std::abs(probe_far);
    if (!std::isfinite(inf) || std::abs(inf) > 1e12 || diverging) {
        throw solver_error(
            "ricci_lower: warp curvature is unstable near the pole; the warp "
            "is not a smooth metric (need f''(0) = 0)");
    }
    return inf;
}

double boundary_mean_curvature(const ModelManifold& model) {
    if (model.kind == ModelKind::interval) return 0.0;
    return (model.n - 1) * model.warp_derivative(model.radius) /
           model.warp(model.radius);
}

}  // namespace eigenbound
