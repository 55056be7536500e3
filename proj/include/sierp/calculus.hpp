#pragma once

#include "sierp/arithmetic.hpp"
#include "sierp/errors.hpp"
#include "sierp/finite_diff.hpp"
#include "sierp/quadrature.hpp"
#include "sierp/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace sierp {

using ExactFn = std::function<Rational(const Rational&)>;

/// A function A: X -> Y between bijection-equipped sets, held as its
/// pullback a = f_Y o A o f_X^{-1}. Every derivative and integral factors
/// through a, so this is the canonical representation; a black box on X is
/// wrapped into this form at the boundary (see through_pullback below).
///
/// `value` is the numeric channel and must be pure and reentrant. The exact
/// channels are optional closed forms used by the exact modes; `breakpoints`
/// lists discontinuities/kinks of `value` so quadrature panels never
/// straddle a jump.
template <class X, class Y>
struct PullbackFunction {
    BijectionContext<X> ctx_x;
    BijectionContext<Y> ctx_y;
    RealFn value;
    ExactFn exact;
    ExactFn exact_derivative;
    ExactFn exact_second_derivative;
    ExactFn exact_antiderivative;
    std::vector<double> breakpoints;

    Y operator()(const X& x) const {
        if (exact) return ctx_y.from_real(exact(ctx_x.to_real(x)));
        return ctx_y.from_real(rational_from_double(value(ctx_x.to_real(x).to_double())));
    }
};

enum class DerivMode { exact, numeric };
enum class IntMode { exact, quadrature };

/// Wrap a black-box map X -> Y as a pullback (numeric channel only).
template <class X, class Y>
PullbackFunction<X, Y> through_pullback(BijectionContext<X> cx, BijectionContext<Y> cy, std::function<Y(const X&)> fn) {
    PullbackFunction<X, Y> F;
    F.ctx_x = cx;
    F.ctx_y = cy;
    F.value = [cx, cy, fn = std::move(fn)](double t) {
        return cy.to_real(fn(cx.from_real(rational_from_double(t, 1e-15)))).to_double();
    };
    return F;
}

namespace calculus_detail {

/// Numeric results pass through the simplest rational within this tolerance
/// before f_Y^{-1}. Mapping a raw double's full 2^-52 denominator into a
/// digit-based context is intractable (the ternary period of 2^52 has
/// ~2^50 digits), and the numeric channel's own accuracy is far coarser.
constexpr double kSnapTol = 1e-9;

inline Rational snap(double v) { return rational_from_double(v, kSnapTol); }

} // namespace calculus_detail

/// DA/Dx at x: exact mode uses the closed-form derivative of the pullback;
/// numeric mode runs central differences + Richardson starting at step h0.
template <class X, class Y>
Y derivative(const PullbackFunction<X, Y>& F, const X& x, DerivMode mode = DerivMode::exact, double h0 = 0.1) {
    const Rational t = F.ctx_x.to_real(x);
    if (mode == DerivMode::exact) {
        if (!F.exact_derivative) throw MissingDerivative("derivative: no closed-form derivative on this pullback");
        return F.ctx_y.from_real(F.exact_derivative(t));
    }
    const DiffResult r = richardson_derivative(F.value, t.to_double(), h0);
    if (r.change > 1e-6)
        throw NotDifferentiable("derivative: extrapolants did not stabilize (relative change " +
                                std::to_string(r.change) + ")");
    return F.ctx_y.from_real(calculus_detail::snap(r.value));
}

/// Laplacian = second pullback derivative.
template <class X, class Y>
Y laplacian(const PullbackFunction<X, Y>& F, const X& x, DerivMode mode = DerivMode::exact, double h0 = 0.1) {
    const Rational t = F.ctx_x.to_real(x);
    if (mode == DerivMode::exact) {
        if (!F.exact_second_derivative)
            throw MissingDerivative("laplacian: no closed-form second derivative on this pullback");
        return F.ctx_y.from_real(F.exact_second_derivative(t));
    }
    const DiffResult r = richardson_second_derivative(F.value, t.to_double(), h0);
    if (r.change > 1e-6)
        throw NotDifferentiable("laplacian: extrapolants did not stabilize (relative change " +
                                std::to_string(r.change) + ")");
    return F.ctx_y.from_real(calculus_detail::snap(r.value));
}

/// Integral from lo to hi (elements of X), valued in Y.
template <class X, class Y>
Y integrate(const PullbackFunction<X, Y>& F, const X& lo, const X& hi, IntMode mode = IntMode::quadrature,
            double tol = 1e-8) {
    const Rational a = F.ctx_x.to_real(lo);
    const Rational b = F.ctx_x.to_real(hi);
    if (mode == IntMode::exact) {
        if (!F.exact_antiderivative)
            throw MissingAntiderivative("integrate: no closed-form antiderivative on this pullback");
        return F.ctx_y.from_real(F.exact_antiderivative(b) - F.exact_antiderivative(a));
    }
    const double v = adaptive_simpson(F.value, a.to_double(), b.to_double(), tol, 40, F.breakpoints);
    return F.ctx_y.from_real(rational_from_double(v, std::min(calculus_detail::kSnapTol, tol * 0.01)));
}

/// The derivative as a function: pullback a' (numeric channel differentiates
/// `value`; exact channels shift down when available).
template <class X, class Y>
PullbackFunction<X, Y> derivative_function(const PullbackFunction<X, Y>& F, double h0 = 0.05) {
    PullbackFunction<X, Y> out;
    out.ctx_x = F.ctx_x;
    out.ctx_y = F.ctx_y;
    if (F.exact_derivative) {
        out.exact = F.exact_derivative;
        out.value = [g = F.exact_derivative](double t) { return g(rational_from_double(t, 1e-15)).to_double(); };
    } else {
        out.value = [f = F.value, h0](double t) { return richardson_derivative(f, t, h0).value; };
    }
    if (F.exact_second_derivative) out.exact_derivative = F.exact_second_derivative;
    if (F.exact) out.exact_antiderivative = F.exact;
    out.breakpoints = F.breakpoints;
    return out;
}

using PullbackSS = PullbackFunction<SierpinskiPoint, SierpinskiPoint>;
using PullbackSR = PullbackFunction<SierpinskiPoint, Rational>;

} // namespace sierp
