#include "sierp/arithmetic.hpp"

namespace sierp {

const BijectionContext<SierpinskiPoint>& sierpinski_context() {
    static const BijectionContext<SierpinskiPoint> ctx{
        "S",
        [](const SierpinskiPoint& p) { return inverse(p); },
        [](const Rational& x) { return forward(x); },
    };
    return ctx;
}

const BijectionContext<Rational>& real_context() {
    static const BijectionContext<Rational> ctx{
        "R",
        [](const Rational& x) { return x; },
        [](const Rational& x) { return x; },
    };
    return ctx;
}

} // namespace sierp
