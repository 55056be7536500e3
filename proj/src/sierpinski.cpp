#include "sierp/sierpinski.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace sierp {

namespace {

enum class Tail { zeros, ones, mixed };

struct Candidate {
    PeriodicDigits rep;
    Tail tail;
};

bool all_digits(const std::vector<std::uint8_t>& v, std::uint8_t d) {
    return std::all_of(v.begin(), v.end(), [d](std::uint8_t x) { return x == d; });
}

/// Admissible binary expansions of a magnitude: the canonical one, plus the
/// terminating twin when the value is dyadic (two representations).
std::vector<Candidate> binary_reps(const Rational& magnitude) {
    PeriodicDigits canonical = expand(magnitude, 2);
    if (magnitude.is_zero()) return {{canonical, Tail::zeros}};
    if (all_digits(canonical.period, 1))
        return {{canonical, Tail::ones}, {terminating_twin(canonical), Tail::zeros}};
    return {{canonical, Tail::mixed}};
}

bool avoids_forbidden_pair(const Candidate& ca, const Candidate& cb) {
    auto [ra, rb] = align(ca.rep, cb.rep);
    auto clash = [](const std::vector<std::uint8_t>& va, const std::vector<std::uint8_t>& vb) {
        for (std::size_t j = 0; j < va.size(); ++j)
            if (va[j] == 1 && vb[j] == 1) return true;
        return false;
    };
    return !clash(ra.int_digits, rb.int_digits) && !clash(ra.pre_frac, rb.pre_frac) && !clash(ra.period, rb.period);
}

Side pattern_of(const Candidate& ca, const Candidate& cb) {
    if (ca.tail == Tail::ones && cb.tail == Tail::zeros) return Side::plus;
    if (ca.tail == Tail::zeros && cb.tail == Tail::ones) return Side::minus;
    return Side::neutral;
}

/// Pairings the forward algorithm can actually emit: (1,1) never appears,
/// and the merged quaternary form never ends in the all-zero block (that
/// would be a terminating ternary written against the trailing-2s
/// convention) — except for the zero point itself.
std::vector<std::pair<Candidate, Candidate>> decodable_pairings(const Rational& mag_a, const Rational& mag_b) {
    const bool both_zero = mag_a.is_zero() && mag_b.is_zero();
    std::vector<std::pair<Candidate, Candidate>> out;
    for (const auto& ca : binary_reps(mag_a))
        for (const auto& cb : binary_reps(mag_b)) {
            if (ca.tail == Tail::zeros && cb.tail == Tail::zeros && !both_zero) continue;
            if (avoids_forbidden_pair(ca, cb)) out.push_back({ca, cb});
        }
    return out;
}

/// Number of representation pairings avoiding (1,1); two means the pair
/// carries the complementary-tail ambiguity (case C).
int avoiding_pairing_count(const Rational& mag_a, const Rational& mag_b) {
    int n = 0;
    for (const auto& ca : binary_reps(mag_a))
        for (const auto& cb : binary_reps(mag_b))
            if (avoids_forbidden_pair(ca, cb)) ++n;
    return n;
}

Side side_from_raw(const PeriodicDigits& ra, const PeriodicDigits& rb) {
    const bool a_ones = all_digits(ra.period, 1);
    const bool a_zeros = all_digits(ra.period, 0);
    const bool b_ones = all_digits(rb.period, 1);
    const bool b_zeros = all_digits(rb.period, 0);
    if (a_ones && b_zeros) return Side::plus;
    if (a_zeros && b_ones) return Side::minus;
    return Side::neutral;
}

void apply_sign(PeriodicDigits& d, bool negative) {
    d.sign = (negative && !d.is_zero()) ? -1 : 1;
}

} // namespace

char side_char(Side s) {
    switch (s) {
        case Side::plus: return '+';
        case Side::minus: return '-';
        default: return '0';
    }
}

SierpinskiPoint::SierpinskiPoint()
    : raw_a_(PeriodicDigits::zero(2)), raw_b_(PeriodicDigits::zero(2)), side_(Side::neutral) {}

SierpinskiPoint SierpinskiPoint::from_raw(PeriodicDigits raw_a, PeriodicDigits raw_b, Side side) {
    SierpinskiPoint p;
    p.raw_a_ = std::move(raw_a);
    p.raw_b_ = std::move(raw_b);
    p.side_ = side;
    return p;
}

SierpinskiPoint::SierpinskiPoint(const Rational& a, const Rational& b, Side side) {
    if ((a.sign() < 0 && b.sign() > 0) || (a.sign() > 0 && b.sign() < 0))
        throw NotInSet("coordinates of opposite sign: (" + a.str() + ", " + b.str() + ")");
    const bool negative = a.sign() < 0 || b.sign() < 0;
    const auto pairings = decodable_pairings(a.abs(), b.abs());
    if (pairings.empty())
        throw NotInSet("no admissible expansion pair for (" + a.str() + ", " + b.str() + ")");
    for (const auto& [ca, cb] : pairings) {
        if (pattern_of(ca, cb) != side) continue;
        raw_a_ = ca.rep;
        raw_b_ = cb.rep;
        apply_sign(raw_a_, negative);
        apply_sign(raw_b_, negative);
        side_ = side;
        return;
    }
    throw InconsistentSide("side tag '" + std::string(1, side_char(side)) + "' contradicts the expansions of (" +
                           a.str() + ", " + b.str() + ")");
}

SierpinskiPoint SierpinskiPoint::operator-() const {
    SierpinskiPoint p = *this;
    if (!p.raw_a_.is_zero()) p.raw_a_.sign = -p.raw_a_.sign;
    if (!p.raw_b_.is_zero()) p.raw_b_.sign = -p.raw_b_.sign;
    return p;
}

bool SierpinskiPoint::operator==(const SierpinskiPoint& o) const {
    return side_ == o.side_ && a() == o.a() && b() == o.b();
}

std::string SierpinskiPoint::str() const {
    return "(" + a().str() + ", " + b().str() + ")" + side_char(side_);
}

SierpinskiPoint SierpinskiPoint::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&]() -> void { throw std::invalid_argument("SierpinskiPoint::parse: malformed '" + text + "'"); };
    if (s.size() < 5 || s.front() != '(') fail();
    auto comma = s.find(',');
    auto close = s.find(')');
    if (comma == std::string::npos || close == std::string::npos || comma > close || close + 1 >= s.size()) fail();
    Rational a = Rational::parse(s.substr(1, comma - 1));
    Rational b = Rational::parse(s.substr(comma + 1, close - comma - 1));
    Side side;
    switch (s[close + 1]) {
        case '+': side = Side::plus; break;
        case '-': side = Side::minus; break;
        case '0': side = Side::neutral; break;
        default: fail(); side = Side::neutral;
    }
    return SierpinskiPoint(a, b, side);
}

SierpinskiPoint forward(const Rational& x) {
    if (x.is_zero()) return SierpinskiPoint();
    PeriodicDigits ternary = expand(x.abs(), 3);
    auto [ra, rb] = split_binary(rebase_tag(ternary, 4));
    const Side side = side_from_raw(ra, rb);
    apply_sign(ra, x.sign() < 0);
    apply_sign(rb, x.sign() < 0);
    return SierpinskiPoint::from_raw(std::move(ra), std::move(rb), side);
}

Rational inverse(const SierpinskiPoint& p) {
    const bool negative = p.raw_a().sign < 0 || p.raw_b().sign < 0;
    PeriodicDigits ma = p.raw_a();
    PeriodicDigits mb = p.raw_b();
    ma.sign = 1;
    mb.sign = 1;
    const Rational v = evaluate(rebase_tag(merge_binary(ma, mb), 3));
    return negative ? -v : v;
}

Rational inverse(const Rational& a, const Rational& b, Side side) {
    return inverse(SierpinskiPoint(a, b, side));
}

PairClass classify_side(const Rational& a, const Rational& b) {
    if ((a.sign() < 0 && b.sign() > 0) || (a.sign() > 0 && b.sign() < 0)) return PairClass::not_in_S;
    const int n = avoiding_pairing_count(a.abs(), b.abs());
    if (n == 0) return PairClass::not_in_S;
    return n == 1 ? PairClass::case_B : PairClass::case_C;
}

std::vector<std::pair<std::int64_t, std::int64_t>> sample_cells(const Rational& lo, const Rational& hi, int k) {
    if (k < 1 || k > 16) throw InvalidResolution("resolution k must be in [1, 16], got " + std::to_string(k));
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    if (!(lo < hi)) return cells;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 3, static_cast<unsigned long>(k));
    const Rational s(scale);
    const mpz_class m_start = ceil_int(lo * s);
    const mpz_class m_end = ceil_int(hi * s);
    const mpz_class count = m_end - m_start;
    if (count > 16'777'216) throw InvalidResolution("cell enumeration too large: " + count.get_str());
    if (!m_start.fits_slong_p() || !m_end.fits_slong_p())
        throw InvalidResolution("interval out of supported prefix range");

    cells.reserve(static_cast<std::size_t>(count.get_si() > 0 ? count.get_si() : 0));
    for (long m = m_start.get_si(); m < m_end.get_si(); ++m) {
        const bool neg = m < 0;
        unsigned long long t = neg ? static_cast<unsigned long long>(-static_cast<long long>(m))
                                   : static_cast<unsigned long long>(m);
        std::int64_t cx = 0, cy = 0;
        int pos = 0;
        while (t != 0) {
            const auto digit = static_cast<int>(t % 3);
            t /= 3;
            if (digit == 2) cx |= std::int64_t{1} << pos;
            if (digit == 1) cy |= std::int64_t{1} << pos;
            ++pos;
        }
        if (neg) {
            cx = -cx;
            cy = -cy;
        }
        cells.emplace_back(cx, cy);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

} // namespace sierp
