#pragma once

#include "sierp/quadrature.hpp"

namespace sierp {

struct DiffResult {
    double value = 0.0;
    double change = 0.0; // |last extrapolant - previous|, relative to max(|value|, 1)
    bool converged = false;
};

/// First derivative of f at t by central differences with Richardson
/// extrapolation: 4 levels of step halving starting from h0. `converged`
/// reports whether the diagonal stabilized to `target` (relative, floored
/// at magnitude 1).
DiffResult richardson_derivative(const RealFn& f, double t, double h0 = 0.1, double target = 1e-8);

/// Second derivative via the central three-point stencil, same scheme.
DiffResult richardson_second_derivative(const RealFn& f, double t, double h0 = 0.1, double target = 1e-8);

} // namespace sierp
