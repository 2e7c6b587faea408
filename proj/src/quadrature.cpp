#include "eigenbound/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace eigenbound {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    // Stop on the error budget, on exhausted depth, or once the estimate is
    // at rounding level (further splitting cannot help and, with a tolerance
    // below machine precision, would recurse without bound).
    const double floor_err =
        8.0 * std::numeric_limits<double>::epsilon() *
        (std::abs(left) + std::abs(right) + std::abs(whole) + 1e-300);
    if (depth <= 0 || std::abs(err) <= 15.0 * tol || std::abs(err) <= floor_err ||
        !(a < lm && lm < m && m < rm && rm < b))
        return left + right + err / 15.0;
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    if (!(a <= b)) throw invalid_input("integrate: interval endpoints out of order");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_piecewise(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           double abs_tol, int max_depth) {
    if (!(a <= b)) throw invalid_input("integrate: interval endpoints out of order");
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    const double panel_tol = abs_tol / static_cast<double>(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate(f, cuts[i], cuts[i + 1], panel_tol, max_depth);
    return total;
}

}  // namespace eigenbound
