#include "sierp/pullbacks.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sierp {

namespace {

void strip_spaces(std::string& s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
}

} // namespace

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

double Polynomial::operator()(double t) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i].to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * Rational(static_cast<long>(i)));
    return d;
}

Polynomial Polynomial::antiderivative() const {
    Polynomial a;
    a.coeffs.push_back(Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) a.coeffs.push_back(coeffs[i] / Rational(static_cast<long>(i + 1)));
    return a;
}

std::string Polynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero() && coeffs.size() > 1) continue;
        std::string term;
        if (i == 0) {
            term = coeffs[i].str();
        } else {
            if (coeffs[i] != Rational(1)) term = coeffs[i].str() + "*";
            term += "t";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

Polynomial Polynomial::parse(const std::string& text) {
    std::string s = text;
    strip_spaces(s);
    if (s.empty()) throw std::invalid_argument("Polynomial::parse: empty input");

    Polynomial p;
    auto add_term = [&](const Rational& c, std::size_t power) {
        if (p.coeffs.size() <= power) p.coeffs.resize(power + 1, Rational(0));
        p.coeffs[power] += c;
    };

    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("Polynomial::parse: dangling sign in '" + text + "'");
        // optional coefficient literal: digits with optional / or . part
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/' || s[i] == '.')) ++i;
        Rational coeff(1);
        bool have_coeff = i > start;
        if (have_coeff) coeff = Rational::parse(s.substr(start, i - start));
        if (i < s.size() && s[i] == '*') ++i;
        std::size_t power = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == ps) throw std::invalid_argument("Polynomial::parse: missing exponent in '" + text + "'");
                power = std::stoul(s.substr(ps, i - ps));
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("Polynomial::parse: expected term at '" + s.substr(start) + "'");
        }
        add_term(sign < 0 ? -coeff : coeff, power);
    }
    return p;
}

Rational PiecewiseConstant::operator()(const Rational& t) const {
    for (const auto& piece : pieces)
        if (piece.lo < t && t < piece.hi) return piece.value;
    return Rational(0);
}

double PiecewiseConstant::operator()(double t) const {
    for (const auto& piece : pieces)
        if (piece.lo.to_double() < t && t < piece.hi.to_double()) return piece.value.to_double();
    return 0.0;
}

Rational PiecewiseConstant::antiderivative(const Rational& t) const {
    // signed overlap of [0, t] with each piece
    const bool reversed = t < Rational(0);
    const Rational lo = reversed ? t : Rational(0);
    const Rational hi = reversed ? Rational(0) : t;
    Rational acc(0);
    for (const auto& piece : pieces) {
        const Rational a = std::max(piece.lo, lo, [](const Rational& x, const Rational& y) { return x < y; });
        const Rational b = std::min(piece.hi, hi, [](const Rational& x, const Rational& y) { return x < y; });
        if (a < b) acc += piece.value * (b - a);
    }
    return reversed ? -acc : acc;
}

std::vector<double> PiecewiseConstant::breakpoints() const {
    std::vector<double> out;
    for (const auto& piece : pieces) {
        out.push_back(piece.lo.to_double());
        out.push_back(piece.hi.to_double());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PiecewiseConstant PiecewiseConstant::parse(const std::string& text) {
    std::string s = text;
    strip_spaces(s);
    if (s.empty()) throw std::invalid_argument("PiecewiseConstant::parse: empty input");
    PiecewiseConstant pc;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t semi = s.find(';', pos);
        std::string chunk = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        pos = semi == std::string::npos ? s.size() : semi + 1;
        if (chunk.empty()) continue;
        const auto comma = chunk.find(',');
        const auto colon = chunk.find(':');
        if (comma == std::string::npos || colon == std::string::npos || comma > colon)
            throw std::invalid_argument("PiecewiseConstant::parse: expected 'lo,hi:value' in '" + chunk + "'");
        Piece piece;
        piece.lo = Rational::parse(chunk.substr(0, comma));
        piece.hi = Rational::parse(chunk.substr(comma + 1, colon - comma - 1));
        piece.value = Rational::parse(chunk.substr(colon + 1));
        if (!(piece.lo < piece.hi))
            throw std::invalid_argument("PiecewiseConstant::parse: empty interval in '" + chunk + "'");
        pc.pieces.push_back(piece);
    }
    std::sort(pc.pieces.begin(), pc.pieces.end(), [](const Piece& x, const Piece& y) { return x.lo < y.lo; });
    for (std::size_t i = 0; i + 1 < pc.pieces.size(); ++i)
        if (pc.pieces[i + 1].lo < pc.pieces[i].hi)
            throw std::invalid_argument("PiecewiseConstant::parse: overlapping intervals");
    return pc;
}

PiecewiseConstant step_function() {
    PiecewiseConstant pc;
    pc.pieces.push_back({Rational(0), Rational(1), Rational(1)});
    pc.pieces.push_back({Rational(-1), Rational(0), Rational(-1)});
    std::sort(pc.pieces.begin(), pc.pieces.end(),
              [](const PiecewiseConstant::Piece& x, const PiecewiseConstant::Piece& y) { return x.lo < y.lo; });
    return pc;
}

namespace {

template <class Y>
PullbackFunction<SierpinskiPoint, Y> polynomial_pullback(const Polynomial& p, const BijectionContext<Y>& cy) {
    PullbackFunction<SierpinskiPoint, Y> F;
    F.ctx_x = sierpinski_context();
    F.ctx_y = cy;
    F.value = [p](double t) { return p(t); };
    F.exact = [p](const Rational& t) { return p(t); };
    F.exact_derivative = [d = p.derivative()](const Rational& t) { return d(t); };
    F.exact_second_derivative = [d2 = p.derivative().derivative()](const Rational& t) { return d2(t); };
    F.exact_antiderivative = [ad = p.antiderivative()](const Rational& t) { return ad(t); };
    return F;
}

} // namespace

PullbackSS polynomial_on_S(const Polynomial& p) { return polynomial_pullback(p, sierpinski_context()); }

PullbackSR polynomial_S_to_R(const Polynomial& p) { return polynomial_pullback(p, real_context()); }

PullbackSR piecewise_S_to_R(const PiecewiseConstant& pc) {
    PullbackSR F;
    F.ctx_x = sierpinski_context();
    F.ctx_y = real_context();
    F.value = [pc](double t) { return pc(t); };
    F.exact = [pc](const Rational& t) { return pc(t); };
    F.exact_antiderivative = [pc](const Rational& t) { return pc.antiderivative(t); };
    F.breakpoints = pc.breakpoints();
    return F;
}

PullbackSR step_pullback() { return piecewise_S_to_R(step_function()); }

} // namespace sierp
