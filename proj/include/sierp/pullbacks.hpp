#pragma once

#include "sierp/calculus.hpp"
#include "sierp/rational.hpp"

#include <string>
#include <vector>

namespace sierp {

/// Polynomial with exact rational coefficients, ascending powers of t.
struct Polynomial {
    std::vector<Rational> coeffs; // empty means 0

    Rational operator()(const Rational& t) const;
    double operator()(double t) const;
    Polynomial derivative() const;
    Polynomial antiderivative() const; // constant term 0
    std::string str() const;

    /// Parses e.g. "t^2", "3*t^2 - 1/2*t + 4", "2t-1".
    static Polynomial parse(const std::string& text);
};

/// Finitely many disjoint open intervals with constant rational values;
/// zero elsewhere (including at the endpoints). The step function of the
/// Fourier example is {(0,1) -> 1, (-1,0) -> -1}.
struct PiecewiseConstant {
    struct Piece {
        Rational lo, hi;
        Rational value;
    };
    std::vector<Piece> pieces;

    Rational operator()(const Rational& t) const;
    double operator()(double t) const;
    /// Exact antiderivative F(t) = integral from 0 to t.
    Rational antiderivative(const Rational& t) const;
    std::vector<double> breakpoints() const;

    /// Parses "lo,hi:value;lo,hi:value;..." with rational or decimal literals.
    static PiecewiseConstant parse(const std::string& text);
};

/// The square wave of the Fourier example: +1 on (0,1), -1 on (-1,0).
PiecewiseConstant step_function();

PullbackSS polynomial_on_S(const Polynomial& p);
PullbackSR polynomial_S_to_R(const Polynomial& p);
PullbackSR piecewise_S_to_R(const PiecewiseConstant& pc);
PullbackSR step_pullback();

} // namespace sierp
