#include "sierp/digits.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>
#include <map>

namespace sierp {

namespace {

constexpr std::size_t kStampTableCap = std::size_t{1} << 26;
constexpr std::size_t kAlignCap = std::size_t{1} << 26;

void check_radix(int radix) {
    if (radix < 2 || radix > 36) throw std::invalid_argument("radix must be in [2, 36]");
}

char digit_char(unsigned d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

int char_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

/// Integer value of a digit list (most significant first). Uses GMP's
/// subquadratic string conversion, which matters for period lengths ~1e6.
mpz_class digits_value(const std::vector<std::uint8_t>& digits, int radix) {
    if (digits.empty()) return 0;
    std::string s;
    s.reserve(digits.size());
    for (auto d : digits) s.push_back(digit_char(d));
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), radix) != 0)
        throw DigitOutOfRange("digit out of range for radix " + std::to_string(radix));
    return z;
}

mpz_class pow_ui(unsigned long base, unsigned long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), base, e);
    return z;
}

std::vector<std::uint8_t> int_digits_of(const mpz_class& n, int radix) {
    if (n == 0) return {};
    char* raw = mpz_get_str(nullptr, radix, n.get_mpz_t());
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<std::uint8_t>(char_digit(c)));
    return out;
}

bool all_equal_to(const std::vector<std::uint8_t>& v, std::uint8_t d) {
    return std::all_of(v.begin(), v.end(), [d](std::uint8_t x) { return x == d; });
}

void validate(const PeriodicDigits& d) {
    check_radix(d.radix);
    if (d.period.empty()) throw std::invalid_argument("PeriodicDigits: empty period");
    auto in_range = [&](const std::vector<std::uint8_t>& v) {
        for (auto x : v)
            if (x >= d.radix) throw DigitOutOfRange("digit " + std::to_string(x) + " out of range for radix " + std::to_string(d.radix));
    };
    in_range(d.int_digits);
    in_range(d.pre_frac);
    in_range(d.period);
}

/// Subtract 1 from the combined int+pre digit chain: turns a terminating
/// expansion ...d into the canonical ...(d-1)(radix-1)(radix-1)... form.
void borrow_one(std::vector<std::uint8_t>& ints, std::vector<std::uint8_t>& pre, int radix) {
    auto dec = [&](std::vector<std::uint8_t>& v) -> bool {
        for (std::size_t j = v.size(); j-- > 0;) {
            if (v[j] > 0) {
                v[j]--;
                return true;
            }
            v[j] = static_cast<std::uint8_t>(radix - 1);
        }
        return false;
    };
    if (!dec(pre) && !dec(ints)) throw std::logic_error("borrow underflow"); // caller guarantees a nonzero chain
    while (!ints.empty() && ints.front() == 0) ints.erase(ints.begin());
}

/// Add 1 to the combined int+pre digit chain (inverse of borrow_one); used
/// to recover the terminating twin of a trailing-(radix-1) expansion.
void carry_one(std::vector<std::uint8_t>& ints, std::vector<std::uint8_t>& pre, int radix) {
    auto inc = [&](std::vector<std::uint8_t>& v) -> bool {
        for (std::size_t j = v.size(); j-- > 0;) {
            if (v[j] + 1 < radix) {
                v[j]++;
                return true;
            }
            v[j] = 0;
        }
        return false;
    };
    if (!inc(pre) && !inc(ints)) ints.insert(ints.begin(), 1);
}

struct FracExpansion {
    std::vector<std::uint8_t> digits;
    std::size_t period_start = 0; // valid when !terminated
    bool terminated = false;
};

/// Long division of r/d in the given radix with exact first-repeat cycle
/// detection. Remainders index a stamped table when d is small, a hash map
/// when d fits a machine word, and an ordered big-int map otherwise.
FracExpansion frac_digits(const mpz_class& r0, const mpz_class& d, int radix) {
    FracExpansion out;
    if (r0 == 0) {
        out.terminated = true;
        return out;
    }
    if (d.fits_ulong_p() && d.get_ui() <= kStampTableCap) {
        static thread_local std::vector<std::uint32_t> stamp;
        static thread_local std::vector<std::uint32_t> pos;
        static thread_local std::uint32_t epoch = 0;
        const std::uint64_t dd = d.get_ui();
        if (stamp.size() < dd) {
            stamp.assign(dd, 0);
            pos.resize(dd);
            epoch = 0;
        }
        if (++epoch == 0) { // stamp wraparound
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
        std::uint64_t r = r0.get_ui();
        while (r != 0) {
            if (stamp[r] == epoch) {
                out.period_start = pos[r];
                return out;
            }
            stamp[r] = epoch;
            pos[r] = static_cast<std::uint32_t>(out.digits.size());
            const std::uint64_t t = r * static_cast<std::uint64_t>(radix);
            out.digits.push_back(static_cast<std::uint8_t>(t / dd));
            r = t % dd;
        }
        out.terminated = true;
        return out;
    }
    if (d.fits_ulong_p()) {
        const std::uint64_t dd = d.get_ui();
        std::unordered_map<std::uint64_t, std::uint32_t> seen;
        std::uint64_t r = r0.get_ui();
        while (r != 0) {
            auto [it, fresh] = seen.emplace(r, static_cast<std::uint32_t>(out.digits.size()));
            if (!fresh) {
                out.period_start = it->second;
                return out;
            }
            const unsigned __int128 t = static_cast<unsigned __int128>(r) * radix;
            out.digits.push_back(static_cast<std::uint8_t>(t / dd));
            r = static_cast<std::uint64_t>(t % dd);
        }
        out.terminated = true;
        return out;
    }
    std::map<mpz_class, std::size_t> seen;
    mpz_class r = r0;
    while (r != 0) {
        auto [it, fresh] = seen.emplace(r, out.digits.size());
        if (!fresh) {
            out.period_start = it->second;
            return out;
        }
        mpz_class t = r * radix;
        mpz_class q;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
        out.digits.push_back(static_cast<std::uint8_t>(q.get_ui()));
    }
    out.terminated = true;
    return out;
}

std::uint8_t frac_digit_at(const PeriodicDigits& d, std::size_t j) { // j is 0-based
    if (j < d.pre_frac.size()) return d.pre_frac[j];
    return d.period[(j - d.pre_frac.size()) % d.period.size()];
}

/// Smallest block length whose repetition generates the period.
std::size_t minimal_period_length(const std::vector<std::uint8_t>& period) {
    const std::size_t p = period.size();
    for (std::size_t cand = 1; cand <= p / 2; ++cand) {
        if (p % cand != 0) continue;
        bool ok = true;
        for (std::size_t j = cand; j < p && ok; ++j) ok = period[j] == period[j % cand];
        if (ok) return cand;
    }
    return p;
}

} // namespace

PeriodicDigits PeriodicDigits::zero(int radix) {
    check_radix(radix);
    return PeriodicDigits{1, radix, {0}, {}, {0}};
}

bool PeriodicDigits::is_zero() const {
    return all_equal_to(int_digits, 0) && all_equal_to(pre_frac, 0) && all_equal_to(period, 0);
}

std::string PeriodicDigits::str() const {
    std::string s;
    if (sign < 0) s += '-';
    s += '(';
    if (int_digits.empty()) {
        s += '0';
    } else {
        for (auto d : int_digits) s += digit_char(d);
    }
    s += '.';
    for (auto d : pre_frac) s += digit_char(d);
    s += '(';
    for (auto d : period) s += digit_char(d);
    s += "))_";
    s += std::to_string(radix);
    return s;
}

PeriodicDigits PeriodicDigits::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

    auto fail = [&]() -> void { throw std::invalid_argument("PeriodicDigits::parse: malformed '" + text + "'"); };

    std::size_t i = 0;
    PeriodicDigits out;
    if (i < s.size() && s[i] == '-') {
        out.sign = -1;
        ++i;
    }
    if (i >= s.size() || s[i] != '(') fail();
    ++i;
    auto read_digits = [&](const char* stops) {
        std::vector<std::uint8_t> v;
        while (i < s.size() && std::string(stops).find(s[i]) == std::string::npos) {
            int d = char_digit(s[i]);
            if (d < 0) fail();
            v.push_back(static_cast<std::uint8_t>(d));
            ++i;
        }
        return v;
    };
    out.int_digits = read_digits(".");
    if (i >= s.size() || s[i] != '.') fail();
    ++i;
    out.pre_frac = read_digits("(");
    if (i >= s.size() || s[i] != '(') fail();
    ++i;
    out.period = read_digits(")");
    if (i + 1 >= s.size() || s[i] != ')' || s[i + 1] != ')') fail();
    i += 2;
    if (i >= s.size() || s[i] != '_') fail();
    ++i;
    if (i >= s.size()) fail();
    out.radix = std::stoi(s.substr(i));

    // Literal parse, but strip the redundant leading zero of nonzero values
    // so that str() round-trips ("(0.2(1))_3" and "(.2(1))_3" agree).
    if (out.int_digits == std::vector<std::uint8_t>{0} && !out.is_zero()) out.int_digits.clear();
    if (out.is_zero() && !out.int_digits.empty()) out.sign = 1;
    validate(out);
    return out;
}

PeriodicDigits expand(const Rational& x, int radix) {
    check_radix(radix);
    if (x.is_zero()) return PeriodicDigits::zero(radix);

    PeriodicDigits out;
    out.sign = x.sign();
    out.radix = radix;
    const mpz_class n = ::abs(x.num());
    const mpz_class& d = x.den();
    mpz_class ip, r;
    mpz_fdiv_qr(ip.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    out.int_digits = int_digits_of(ip, radix);

    FracExpansion frac = frac_digits(r, d, radix);
    if (frac.terminated) {
        out.pre_frac = std::move(frac.digits);
        borrow_one(out.int_digits, out.pre_frac, radix);
        out.period = {static_cast<std::uint8_t>(radix - 1)};
    } else {
        out.pre_frac.assign(frac.digits.begin(), frac.digits.begin() + frac.period_start);
        out.period.assign(frac.digits.begin() + frac.period_start, frac.digits.end());
    }
    return out;
}

Rational evaluate(const PeriodicDigits& d) {
    validate(d);
    const auto s = static_cast<unsigned long>(d.pre_frac.size());
    const auto p = static_cast<unsigned long>(d.period.size());
    const mpz_class ival = digits_value(d.int_digits, d.radix);
    const mpz_class uval = digits_value(d.pre_frac, d.radix);
    const mpz_class vval = digits_value(d.period, d.radix);
    const mpz_class bs = pow_ui(d.radix, s);
    const mpz_class bp1 = pow_ui(d.radix, p) - 1;
    mpz_class num = (ival * bs + uval) * bp1 + vval;
    if (d.sign < 0) num = -num;
    return Rational(num, bs * bp1);
}

Rational truncate(const PeriodicDigits& d, int n) {
    validate(d);
    if (n < 0) throw std::invalid_argument("truncate: negative digit count");
    std::vector<std::uint8_t> frac(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) frac[j] = frac_digit_at(d, static_cast<std::size_t>(j));
    const mpz_class ival = digits_value(d.int_digits, d.radix);
    const mpz_class fval = digits_value(frac, d.radix);
    const mpz_class bn = pow_ui(d.radix, static_cast<unsigned long>(n));
    mpz_class num = ival * bn + fval;
    if (d.sign < 0) num = -num;
    return Rational(num, bn);
}

PeriodicDigits rebase_tag(const PeriodicDigits& d, int new_radix) {
    check_radix(new_radix);
    const int bound = std::min(d.radix, new_radix);
    auto check = [&](const std::vector<std::uint8_t>& v) {
        for (auto x : v)
            if (x >= bound)
                throw DigitOutOfRange("rebase_tag: digit " + std::to_string(x) + " not valid in both radix " +
                                      std::to_string(d.radix) + " and " + std::to_string(new_radix));
    };
    check(d.int_digits);
    check(d.pre_frac);
    check(d.period);
    PeriodicDigits out = d;
    out.radix = new_radix;
    return out;
}

std::pair<PeriodicDigits, PeriodicDigits> split_binary(const PeriodicDigits& d) {
    if (d.radix != 4) throw std::invalid_argument("split_binary: expected radix 4");
    PeriodicDigits a, b;
    a.sign = b.sign = d.sign;
    a.radix = b.radix = 2;
    auto map_list = [](const std::vector<std::uint8_t>& v, std::vector<std::uint8_t>& va, std::vector<std::uint8_t>& vb) {
        va.reserve(v.size());
        vb.reserve(v.size());
        for (auto x : v) {
            if (x >= 3) throw DigitOutOfRange("split_binary: digit 3 has no admissible binary pair");
            va.push_back(static_cast<std::uint8_t>(x >> 1));
            vb.push_back(static_cast<std::uint8_t>(x & 1));
        }
    };
    map_list(d.int_digits, a.int_digits, b.int_digits);
    map_list(d.pre_frac, a.pre_frac, b.pre_frac);
    map_list(d.period, a.period, b.period);
    if (a.is_zero()) a.sign = 1;
    if (b.is_zero()) b.sign = 1;
    return {std::move(a), std::move(b)};
}

PeriodicDigits merge_binary(const PeriodicDigits& a, const PeriodicDigits& b) {
    if (a.radix != 2 || b.radix != 2) throw std::invalid_argument("merge_binary: expected radix 2 inputs");
    if (!a.is_zero() && !b.is_zero() && a.sign != b.sign)
        throw std::invalid_argument("merge_binary: sign mismatch");
    const PeriodicDigits* pa = &a;
    const PeriodicDigits* pb = &b;
    std::pair<PeriodicDigits, PeriodicDigits> aligned;
    if (a.int_digits.size() != b.int_digits.size() || a.pre_frac.size() != b.pre_frac.size() ||
        a.period.size() != b.period.size()) {
        aligned = align(a, b);
        pa = &aligned.first;
        pb = &aligned.second;
    }
    PeriodicDigits out;
    out.sign = a.is_zero() ? b.sign : a.sign;
    out.radix = 4;
    auto merge_list = [](const std::vector<std::uint8_t>& va, const std::vector<std::uint8_t>& vb,
                         std::vector<std::uint8_t>& vo) {
        vo.reserve(va.size());
        for (std::size_t j = 0; j < va.size(); ++j) {
            if (va[j] == 1 && vb[j] == 1) throw ForbiddenPair("merge_binary: pair (1,1) — point not in S");
            vo.push_back(static_cast<std::uint8_t>(2 * va[j] + vb[j]));
        }
    };
    merge_list(pa->int_digits, pb->int_digits, out.int_digits);
    merge_list(pa->pre_frac, pb->pre_frac, out.pre_frac);
    merge_list(pa->period, pb->period, out.period);
    return out;
}

std::pair<PeriodicDigits, PeriodicDigits> align(const PeriodicDigits& a, const PeriodicDigits& b) {
    if (a.radix != b.radix) throw std::invalid_argument("align: radix mismatch");
    validate(a);
    validate(b);
    const std::size_t ilen = std::max(a.int_digits.size(), b.int_digits.size());
    const std::size_t s = std::max(a.pre_frac.size(), b.pre_frac.size());
    const std::size_t p = std::lcm(a.period.size(), b.period.size());
    if (p > kAlignCap) throw std::length_error("align: period lcm exceeds supported length");

    auto stretch = [&](const PeriodicDigits& d) {
        PeriodicDigits out;
        out.sign = d.sign;
        out.radix = d.radix;
        out.int_digits.assign(ilen - d.int_digits.size(), 0);
        out.int_digits.insert(out.int_digits.end(), d.int_digits.begin(), d.int_digits.end());
        out.pre_frac.resize(s);
        for (std::size_t j = 0; j < s; ++j) out.pre_frac[j] = frac_digit_at(d, j);
        out.period.resize(p);
        for (std::size_t j = 0; j < p; ++j) out.period[j] = frac_digit_at(d, s + j);
        return out;
    };
    return {stretch(a), stretch(b)};
}

PeriodicDigits normalize(const PeriodicDigits& d) {
    validate(d);
    if (d.is_zero()) return PeriodicDigits::zero(d.radix);

    PeriodicDigits out = d;
    out.period.resize(minimal_period_length(out.period));
    // absorb the tail of the preperiod into the period
    while (!out.pre_frac.empty() && out.pre_frac.back() == out.period.back()) {
        out.pre_frac.pop_back();
        std::rotate(out.period.begin(), out.period.end() - 1, out.period.end());
    }
    while (!out.int_digits.empty() && out.int_digits.front() == 0) out.int_digits.erase(out.int_digits.begin());
    if (all_equal_to(out.period, 0)) {
        // terminating form: rewrite with the trailing-(radix-1) convention
        while (!out.pre_frac.empty() && out.pre_frac.back() == 0) out.pre_frac.pop_back();
        borrow_one(out.int_digits, out.pre_frac, out.radix);
        out.period = {static_cast<std::uint8_t>(out.radix - 1)};
    }
    return out;
}

PeriodicDigits terminating_twin(const PeriodicDigits& d) {
    validate(d);
    if (!all_equal_to(d.period, static_cast<std::uint8_t>(d.radix - 1)))
        throw std::invalid_argument("terminating_twin: expansion does not end in the (radix-1) block");
    if (d.is_zero()) throw std::invalid_argument("terminating_twin: zero has no twin");
    PeriodicDigits out = d;
    carry_one(out.int_digits, out.pre_frac, out.radix);
    out.period = {0};
    return out;
}

} // namespace sierp
