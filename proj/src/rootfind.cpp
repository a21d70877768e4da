#include "qpm/rootfind.hpp"

#include <cmath>
#include <limits>

#include "qpm/errors.hpp"

namespace qpm {

ScanResult coarse_scan(const std::function<double(double)>& f, double lo, double hi,
                       int points, double degenerate_eps) {
    ScanResult result;
    result.min_abs_value = std::numeric_limits<double>::infinity();

    bool has_prev = false;
    double prev_x = 0.0, prev_f = 0.0;
    bool any_above_eps = false;
    for (int k = 0; k < points; ++k) {
        const double x = lo + (hi - lo) * k / (points - 1);
        double value = 0.0;
        bool valid = true;
        try {
            value = f(x);
        } catch (const OutOfValidityRange&) {
            valid = false;
        } catch (const StencilOutOfRange&) {
            valid = false;
        } catch (const NonPhysical&) {
            valid = false;
        }
        if (!valid || !std::isfinite(value)) {
            has_prev = false;
            continue;
        }
        ++result.valid_points;
        if (std::abs(value) < result.min_abs_value) {
            result.min_abs_value = std::abs(value);
            result.min_abs_at = x;
        }
        if (degenerate_eps > 0 && std::abs(value) >= degenerate_eps) any_above_eps = true;
        if (has_prev && (prev_f == 0.0 || prev_f * value < 0.0)) {
            result.sign_changes.push_back({prev_x, x});
            if (prev_f < 0.0 && value > 0.0)
                result.upward_sign_changes.push_back({prev_x, x});
        }
        prev_x = x;
        prev_f = value;
        has_prev = true;
    }
    result.all_below_epsilon =
        degenerate_eps > 0 && result.valid_points > 0 && !any_above_eps;
    return result;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double x_tol, double f_tol) {
    double fa = f(lo);
    double fb = f(hi);
    if (fa == 0.0) return lo;
    if (fb == 0.0) return hi;
    if (fa * fb > 0.0) throw NoRootInBracket("bisect_root: no sign change in bracket");

    double best_x = std::abs(fa) < std::abs(fb) ? lo : hi;
    double best_f = std::min(std::abs(fa), std::abs(fb));
    for (int iter = 0; iter < 200 && (hi - lo) > x_tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
        const double fm = f(mid);
        if (std::abs(fm) < best_f) {
            best_f = std::abs(fm);
            best_x = mid;
        }
        if (fm == 0.0) return mid;
        if (std::abs(fm) <= f_tol) return mid;
        if (fa * fm < 0.0) {
            hi = mid;
            fb = fm;
        } else {
            lo = mid;
            fa = fm;
        }
    }

    // Secant polish inside the final bracket; keep only improving steps.
    double x0 = lo, f0 = fa, x1 = hi, f1 = fb;
    for (int iter = 0; iter < 3; ++iter) {
        const double denom = f1 - f0;
        if (denom == 0.0) break;
        const double x2 = x1 - f1 * (x1 - x0) / denom;
        if (!(x2 >= lo && x2 <= hi)) break;
        const double f2 = f(x2);
        if (std::abs(f2) >= best_f) break;
        best_f = std::abs(f2);
        best_x = x2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    return best_x;
}

}  // namespace qpm
