#pragma once

#include "sierp/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sierp {

/// Exact eventually-periodic positional expansion
///     sign * (int_digits . pre_frac (period))_radix
/// with the period block repeating forever.
///
/// Canonical form, as produced by expand():
///   - zero is {+, {0}, {}, {0}};
///   - otherwise int_digits has no leading zeros (empty means 0), the period
///     is minimal and never the all-zero block, the preperiod is minimal, and
///     a value with a terminating expansion is written with the trailing
///     (radix-1) block, e.g. 1 = (0.(2))_3.
///
/// split_binary()/merge_binary()/align() deliberately work on *raw*
/// (unnormalized) digit lists: trailing-(1)/trailing-(0) patterns and
/// positional padding carry the side information of the double cover.
/// evaluate() and truncate() accept raw forms too.
struct PeriodicDigits {
    int sign = 1; // +1 or -1; zero carries +1
    int radix = 3;
    std::vector<std::uint8_t> int_digits; // most significant first
    std::vector<std::uint8_t> pre_frac;
    std::vector<std::uint8_t> period; // nonempty

    static PeriodicDigits zero(int radix);

    /// True iff the represented value is 0 (works on raw forms).
    bool is_zero() const;

    bool operator==(const PeriodicDigits&) const = default;

    /// Text form, e.g. "-(10.2(01))_3"; zero prints as "(0.(0))_3".
    std::string str() const;
    /// Inverse of str(). Parses literally: no normalization is applied, so
    /// raw forms round-trip. expand() is the only normalizer.
    static PeriodicDigits parse(const std::string& text);
};

/// Digit expansion of x in the given radix, normalized per the conventions
/// above. Total on rationals; period detection is exact (remainder cycle).
PeriodicDigits expand(const Rational& x, int radix);

/// Exact value of the expansion (closed-form geometric series).
Rational evaluate(const PeriodicDigits& d);

/// Value of the expansion cut after n fractional digits.
Rational truncate(const PeriodicDigits& d, int n);

/// Reinterpret the digit lists in a new radix; the value changes. Throws
/// DigitOutOfRange if a digit is not a valid digit of both radices.
PeriodicDigits rebase_tag(const PeriodicDigits& d, int new_radix = 4);

/// Digit-wise split of a radix-4 expansion (digits 0..2) into a binary pair:
/// 0 -> (0,0), 1 -> (0,1), 2 -> (1,0). Outputs are raw and share the input's
/// digit-list lengths. Throws DigitOutOfRange on digit 3.
std::pair<PeriodicDigits, PeriodicDigits> split_binary(const PeriodicDigits& d);

/// Digit-wise inverse of split_binary: 2*a_j + b_j. Inputs are aligned first
/// if their shapes differ. Throws ForbiddenPair if some position is (1,1).
PeriodicDigits merge_binary(const PeriodicDigits& a, const PeriodicDigits& b);

/// Rewrite both expansions (value-preserving, no normalization) to equal
/// int-digit length, equal preperiod length and period length lcm(p1,p2).
std::pair<PeriodicDigits, PeriodicDigits> align(const PeriodicDigits& a, const PeriodicDigits& b);

/// Canonical form of an arbitrary well-formed expansion.
PeriodicDigits normalize(const PeriodicDigits& d);

/// The other expansion of a value written with the trailing-(radix-1) block:
/// increments the last digit and repeats 0 instead, e.g. (0.(1))_2 -> (1.(0))_2.
/// The result is raw (terminating expansions are non-canonical by convention).
PeriodicDigits terminating_twin(const PeriodicDigits& d);

} // namespace sierp
