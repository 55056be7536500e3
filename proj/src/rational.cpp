#include "sierp/rational.hpp"

#include "sierp/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace sierp {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

    auto parse_int = [](const std::string& t) {
        mpz_class z;
        if (t.empty() || mpz_set_str(z.get_mpz_t(), t.c_str(), 10) != 0)
            throw std::invalid_argument("Rational::parse: bad integer '" + t + "'");
        return z;
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class n = parse_int(s.substr(0, slash));
        mpz_class d = parse_int(s.substr(slash + 1));
        if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
        return Rational(n, d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        bool neg = !s.empty() && s[0] == '-';
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (head == "-" || head == "+") head += "0";
        if (head.empty()) head = "0";
        if (tail.empty()) tail = "0";
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("Rational::parse: bad decimal '" + text + "'");
        mpz_class ip = parse_int(head);
        mpz_class fp = parse_int(tail);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
        mpz_class n = ip * scale;
        if (neg)
            n -= fp;
        else
            n += fp;
        return Rational(n, scale);
    }
    return Rational(parse_int(s));
}

std::string Rational::str() const {
    std::string s = num().get_str();
    if (!is_integer()) s += "/" + den().get_str();
    return s;
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = num() * scale / den(); // truncates toward zero
    bool neg = scaled < 0;
    std::string raw = mpz_class(::abs(scaled)).get_str();
    if (static_cast<int>(raw.size()) <= digits) raw.insert(0, digits + 1 - raw.size(), '0');
    std::string out = neg ? "-" : "";
    out += raw.substr(0, raw.size() - digits);
    if (digits > 0) out += "." + raw.substr(raw.size() - digits);
    return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) throw std::domain_error("Rational::pow: zero to negative power");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return inv ? Rational(d, n) : Rational(n, d);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational::reciprocal: zero");
    return Rational(den(), num());
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class floor_int(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

mpz_class ceil_int(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

Rational rational_from_double(double v, double tol, long max_den) {
    if (!std::isfinite(v)) throw std::domain_error("rational_from_double: non-finite value");
    if (v == 0.0) return Rational(0);
    bool neg = v < 0;
    double x = neg ? -v : v;

    // Continued-fraction convergents h/k of x; the first within tol wins.
    long h_prev = 1, k_prev = 0;
    long h = static_cast<long>(std::floor(x)), k = 1;
    double frac = x - std::floor(x);
    Rational best(h, k);
    for (int iter = 0; iter < 64; ++iter) {
        double approx = static_cast<double>(h) / static_cast<double>(k);
        if (std::fabs(approx - x) <= tol) break;
        if (frac <= 0) break;
        double inv = 1.0 / frac;
        double a_f = std::floor(inv);
        if (a_f > 4e18) break;
        long a = static_cast<long>(a_f);
        frac = inv - a_f;
        long h_next = a * h + h_prev;
        long k_next = a * k + k_prev;
        if (k_next > max_den || k_next <= 0) break;
        h_prev = h; k_prev = k;
        h = h_next; k = k_next;
        best = Rational(h, k);
    }
    best = Rational(h, k);
    return neg ? -best : best;
}

} // namespace sierp
