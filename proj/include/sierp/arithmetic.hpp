#pragma once

#include "sierp/errors.hpp"
#include "sierp/rational.hpp"
#include "sierp/sierpinski.hpp"

#include <functional>
#include <string>

namespace sierp {

/// A set equipped with a bijection onto the rationals. to_real is f,
/// from_real is f^{-1}; the induced arithmetic pulls every field operation
/// through f. The identity context makes Element = Rational behave as
/// plain R, so the same code serves S, R, and any future bijection-equipped
/// set simultaneously.
template <class Element>
struct BijectionContext {
    std::string label;
    std::function<Rational(const Element&)> to_real;
    std::function<Element(const Rational&)> from_real;
};

template <class E>
E oplus(const BijectionContext<E>& ctx, const E& x, const E& y) {
    return ctx.from_real(ctx.to_real(x) + ctx.to_real(y));
}

template <class E>
E ominus(const BijectionContext<E>& ctx, const E& x, const E& y) {
    return ctx.from_real(ctx.to_real(x) - ctx.to_real(y));
}

template <class E>
E odot(const BijectionContext<E>& ctx, const E& x, const E& y) {
    return ctx.from_real(ctx.to_real(x) * ctx.to_real(y));
}

template <class E>
E oslash(const BijectionContext<E>& ctx, const E& x, const E& y) {
    const Rational fy = ctx.to_real(y);
    if (fy.is_zero()) throw DivisionByZeroPrime("oslash: divisor maps to 0");
    return ctx.from_real(ctx.to_real(x) / fy);
}

/// n' = f^{-1}(n).
template <class E>
E embed_natural(const BijectionContext<E>& ctx, long n) {
    return ctx.from_real(Rational(n));
}

/// x^{n'} = x (.) ... (.) x, n factors; n = 0 gives 1'.
template <class E>
E power(const BijectionContext<E>& ctx, const E& x, long n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    return ctx.from_real(ctx.to_real(x).pow(n));
}

const BijectionContext<SierpinskiPoint>& sierpinski_context();
const BijectionContext<Rational>& real_context();

} // namespace sierp
