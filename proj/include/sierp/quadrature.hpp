#pragma once

#include <functional>
#include <vector>

namespace sierp {

using RealFn = std::function<double(double)>;

/// Adaptive composite Simpson integration of f over [a, b] (a > b allowed,
/// with the usual sign flip). Interior breakpoints split the range first so
/// panels never straddle a known jump or kink. Throws ToleranceNotMet when
/// a panel still fails its share of `tol` at `max_depth` bisections.
double adaptive_simpson(const RealFn& f, double a, double b, double tol = 1e-8, int max_depth = 40,
                        const std::vector<double>& breakpoints = {});

} // namespace sierp
