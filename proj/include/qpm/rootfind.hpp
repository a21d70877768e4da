#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qpm {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Result of a fixed-density scan for sign changes. Points where the function
/// throws OutOfValidityRange-like errors are treated as absent, not zero.
struct ScanResult {
    std::vector<Bracket> sign_changes;        // consecutive valid points with f_a*f_b < 0
    std::vector<Bracket> upward_sign_changes; // subset with f_a < 0 < f_b
    bool all_below_epsilon = false;           // |f| < degenerate_eps at every valid point
    int valid_points = 0;
    double min_abs_value = 0.0;
    double min_abs_at = 0.0;
};

ScanResult coarse_scan(const std::function<double(double)>& f, double lo, double hi,
                       int points, double degenerate_eps = 0.0);

/// Deterministic bisection to |f| <= f_tol or interval < x_tol, followed by a
/// few secant polish steps accepted only while they stay bracketed and reduce
/// |f|. Returns the best abscissa found.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double x_tol, double f_tol);

}  // namespace qpm
