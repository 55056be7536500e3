#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sierp {

/// Arbitrary-precision rational: signed numerator over positive denominator,
/// always in lowest terms. Thin value wrapper over GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Accepts "p", "p/q", or a finite decimal like "-12.75" (exact, p/10^k).
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    std::string str() const; // "p" or "p/q"
    /// Decimal rendering truncated (toward zero) after `digits` fractional digits.
    std::string decimal(int digits) const;

    Rational operator-() const;
    Rational abs() const;
    /// x^e for integer e (e < 0 requires x != 0).
    Rational pow(long e) const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

/// Largest integer <= r.
mpz_class floor_int(const Rational& r);
/// Smallest integer >= r.
mpz_class ceil_int(const Rational& r);

/// Simplest rational within `tol` of v (continued-fraction convergents).
/// Stops early at `max_den`, returning the best convergent found so far.
Rational rational_from_double(double v, double tol = 1e-9, long max_den = 10000000L);

} // namespace sierp
