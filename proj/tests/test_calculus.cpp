#include "sierp/calculus.hpp"

#include "sierp/errors.hpp"
#include "sierp/pullbacks.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sierp;

namespace {

PullbackSR real_valued(RealFn f, std::vector<double> breakpoints = {}) {
    PullbackSR F;
    F.ctx_x = sierpinski_context();
    F.ctx_y = real_context();
    F.value = std::move(f);
    F.breakpoints = std::move(breakpoints);
    return F;
}

} // namespace

TEST_CASE("derivative: exact mode on polynomial pullbacks") {
    const PullbackSS square = polynomial_on_S(Polynomial::parse("t^2"));
    CHECK(derivative(square, forward(Rational(3))) == forward(Rational(6)));

    const PullbackSS ident = polynomial_on_S(Polynomial::parse("t"));
    auto rng = test_util::make_rng(41);
    for (int i = 0; i < 10; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 2000));
        CHECK(derivative(ident, x) == forward(Rational(1)));
    }

    const PullbackSR slope = polynomial_S_to_R(Polynomial::parse("t"));
    CHECK(derivative(slope, forward(Rational(17, 5))) == Rational(1));
}

TEST_CASE("derivative: numeric mode stabilizes and snaps") {
    const PullbackSS square = polynomial_on_S(Polynomial::parse("t^2"));
    CHECK(derivative(square, forward(Rational(3)), DerivMode::numeric) == forward(Rational(6)));

    const PullbackSR sine = real_valued([](double t) { return std::sin(std::numbers::pi * t); });
    const Rational d = derivative(sine, forward(Rational(1, 2)), DerivMode::numeric);
    CHECK(std::fabs(d.to_double()) <= 1e-8); // cos(pi/2) = 0
    const Rational d0 = derivative(sine, SierpinskiPoint(), DerivMode::numeric);
    CHECK(std::fabs(d0.to_double() - std::numbers::pi) <= 1e-7);
}

TEST_CASE("derivative error paths") {
    const PullbackSR blackbox = real_valued([](double t) { return t * t; });
    CHECK_THROWS_AS(derivative(blackbox, forward(Rational(1))), MissingDerivative);
    CHECK_THROWS_AS(derivative(step_pullback(), SierpinskiPoint(), DerivMode::numeric), NotDifferentiable);
}

TEST_CASE("laplacian") {
    const PullbackSS square = polynomial_on_S(Polynomial::parse("t^2"));
    auto rng = test_util::make_rng(42);
    for (int i = 0; i < 8; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 2000));
        CHECK(laplacian(square, x) == forward(Rational(2)));
    }
    const PullbackSS lin = polynomial_on_S(Polynomial::parse("3*t - 1/2"));
    CHECK(laplacian(lin, forward(Rational(9, 7))) == SierpinskiPoint());

    const PullbackSR sine = real_valued([](double t) { return std::sin(std::numbers::pi * t); });
    const Rational at_zero = laplacian(sine, SierpinskiPoint(), DerivMode::numeric);
    CHECK(std::fabs(at_zero.to_double()) <= 1e-6);
}

TEST_CASE("integrate: worked examples") {
    const PullbackSR unit = polynomial_S_to_R(Polynomial::parse("1"));
    CHECK(integrate(unit, SierpinskiPoint(), forward(Rational(1)), IntMode::exact) == Rational(1));
    CHECK(integrate(unit, SierpinskiPoint(), forward(Rational(1))) == Rational(1)); // quadrature + snap

    const PullbackSS ramp = polynomial_on_S(Polynomial::parse("t"));
    CHECK(integrate(ramp, SierpinskiPoint(), forward(Rational(2)), IntMode::exact) == forward(Rational(2)));

    // the step function over a symmetric interval: odd integrand, zero integral
    const SierpinskiPoint T = forward(Rational(1));
    const Rational r = integrate(step_pullback(), -T, T, IntMode::quadrature, 1e-8);
    CHECK(std::fabs(r.to_double()) < 1e-8);
    CHECK(integrate(step_pullback(), -T, T, IntMode::exact) == Rational(0));
}

TEST_CASE("integrate error paths") {
    const PullbackSR blackbox = real_valued([](double t) { return t; });
    CHECK_THROWS_AS(integrate(blackbox, SierpinskiPoint(), forward(Rational(1)), IntMode::exact),
                    MissingAntiderivative);
    // a jump with no breakpoint supplied starves the refinement
    PullbackSR bare = real_valued([](double t) { return t > 0.2 ? 1.0 : 0.0; });
    CHECK_THROWS_AS(integrate(bare, SierpinskiPoint(), forward(Rational(1)), IntMode::quadrature, 1e-12),
                    ToleranceNotMet);
}

TEST_CASE("fundamental theorem, both directions, three smooth pullbacks") {
    struct Case {
        RealFn f;
        RealFn fprime;
    };
    const std::vector<Case> cases{
        {[](double t) { return t * t; }, [](double t) { return 2 * t; }},
        {[](double t) { return std::sin(std::numbers::pi * t); },
         [](double t) { return std::numbers::pi * std::cos(std::numbers::pi * t); }},
        {[](double t) { return std::exp(t / 2); }, [](double t) { return 0.5 * std::exp(t / 2); }},
    };
    auto rng = test_util::make_rng(43);
    const SierpinskiPoint lo = forward(Rational(-1));
    for (const auto& c : cases) {
        for (int i = 0; i < 20; ++i) {
            std::uniform_int_distribution<long> num(-96, 96);
            const Rational t(num(rng), 48); // dyadic grid keeps forward() cheap
            const SierpinskiPoint x = forward(t);

            // d/dX of the quadrature integral reproduces the integrand
            const PullbackSR integral_of = real_valued(
                [&](double u) { return adaptive_simpson(c.f, -1.0, u, 1e-10); });
            const Rational lhs1 = derivative(integral_of, x, DerivMode::numeric, 0.1);
            CHECK(std::fabs(lhs1.to_double() - c.f(t.to_double())) <= 1e-6);

            // integral of the derivative telescopes
            const PullbackSR deriv_fn = real_valued(c.fprime);
            const Rational lhs2 = integrate(deriv_fn, lo, x, IntMode::quadrature, 1e-8);
            const double rhs2 = c.f(t.to_double()) - c.f(-1.0);
            CHECK(std::fabs(lhs2.to_double() - rhs2) <= 1e-6);
        }
    }
}

TEST_CASE("the limit-quotient form converges to the pullback derivative at first order") {
    // (A(x (+) h') (-) A(x)) (/) f(h') with h' = f^{-1}(h); for a = t^2 the
    // quotient is exactly 2x + h, so the error against a'(x) is exactly h.
    const auto& S = sierpinski_context();
    const PullbackSS square = polynomial_on_S(Polynomial::parse("t^2"));
    const SierpinskiPoint x = forward(Rational(3));
    const SierpinskiPoint dexact = derivative(square, x); // 6'
    for (long den : {100L, 1000L, 10000L}) {
        const Rational h(1, den);
        const SierpinskiPoint xh = oplus(S, x, S.from_real(h));
        const SierpinskiPoint quotient = oslash(S, ominus(S, square(xh), square(x)), S.from_real(h));
        CHECK(inverse(quotient) - inverse(dexact) == h);
    }
}

TEST_CASE("derivative and integral are linear in the pullback") {
    const Polynomial p = Polynomial::parse("3*t^2 - t");
    const Polynomial q = Polynomial::parse("t^3 + 1/2");
    Polynomial sum;
    sum.coeffs = {Rational(1, 2), Rational(-1), Rational(3), Rational(1)};
    const auto& S = sierpinski_context();

    auto rng = test_util::make_rng(44);
    for (int i = 0; i < 12; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 8));
        const SierpinskiPoint lhs = derivative(polynomial_on_S(sum), x);
        const SierpinskiPoint rhs = oplus(S, derivative(polynomial_on_S(p), x), derivative(polynomial_on_S(q), x));
        CHECK(lhs == rhs);

        const SierpinskiPoint ilhs = integrate(polynomial_on_S(sum), SierpinskiPoint(), x, IntMode::exact);
        const SierpinskiPoint irhs = oplus(S, integrate(polynomial_on_S(p), SierpinskiPoint(), x, IntMode::exact),
                                           integrate(polynomial_on_S(q), SierpinskiPoint(), x, IntMode::exact));
        CHECK(ilhs == irhs);
    }
}

TEST_CASE("power rule: D x^{n'} = n' (.) x^{(n-1)'}") {
    const auto& S = sierpinski_context();
    auto rng = test_util::make_rng(45);
    for (long n = 2; n <= 5; ++n) {
        Polynomial mono;
        mono.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
        mono.coeffs.back() = Rational(1);
        const PullbackSS F = polynomial_on_S(mono);
        for (int i = 0; i < 8; ++i) {
            const SierpinskiPoint x = forward(test_util::random_rational(rng, 6));
            CHECK(derivative(F, x) == odot(S, embed_natural(S, n), power(S, x, n - 1)));
        }
    }
}
