#pragma once

#include "sierp/digits.hpp"
#include "sierp/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sierp {

/// Sheet of the double-covered plane a point lives on. Ambiguous pairs
/// (case C: one coordinate dyadic, tails complementary) need plus/minus;
/// everything else is neutral.
enum class Side { plus, minus, neutral };

/// Classification of a coordinate pair by how many admissible expansion
/// pairings it has. case_A (both coordinates irrational) is unreachable
/// over the rationals and reported as case_B.
enum class PairClass { case_A, case_B, case_C, not_in_S };

char side_char(Side s);

/// A point of the Sierpinski set S: two coordinates plus the side tag.
///
/// Internally the point keeps the raw aligned binary expansions fixed by
/// the forward algorithm; the coordinates are evaluated from them on
/// demand. Constructing a point from bare coordinates re-derives the
/// expansions and validates membership, so NotInSet / InconsistentSide
/// surface at construction time.
class SierpinskiPoint {
public:
    /// The zero point 0' = (0, 0, neutral).
    SierpinskiPoint();

    /// Validating constructor; throws NotInSet or InconsistentSide.
    SierpinskiPoint(const Rational& a, const Rational& b, Side side);

    /// Trusted construction from raw radix-2 expansions (forward's path).
    static SierpinskiPoint from_raw(PeriodicDigits raw_a, PeriodicDigits raw_b, Side side);

    Rational a() const { return evaluate(raw_a_); }
    Rational b() const { return evaluate(raw_b_); }
    Side side() const { return side_; }

    const PeriodicDigits& raw_a() const { return raw_a_; }
    const PeriodicDigits& raw_b() const { return raw_b_; }

    /// Negation: both coordinates negated, side tag kept.
    SierpinskiPoint operator-() const;

    /// Value equality on (a, b, side); the double cover makes
    /// (1,1)+ and (1,1)- distinct.
    bool operator==(const SierpinskiPoint& o) const;
    bool operator!=(const SierpinskiPoint& o) const { return !(*this == o); }

    /// Text form "(p1/q1, p2/q2)[+|-|0]", e.g. "(1, 1)+".
    std::string str() const;
    static SierpinskiPoint parse(const std::string& text);

private:
    PeriodicDigits raw_a_;
    PeriodicDigits raw_b_;
    Side side_;
};

/// The bijection g: ternary expansion (trailing-2s convention), digits
/// reread in base 4, split into the binary pair. g(-|x|) = -g(|x|).
SierpinskiPoint forward(const Rational& x);

/// The inverse f = g^{-1}: merge the stored binary pair, reread the digits
/// in base 3, evaluate. inverse(forward(x)) == x exactly.
Rational inverse(const SierpinskiPoint& p);

/// Convenience overload: validates (a, b, side) and inverts in one step.
Rational inverse(const Rational& a, const Rational& b, Side side);

PairClass classify_side(const Rational& a, const Rational& b);

/// Dyadic grid cells of side 2^-k hit by g([lo, hi)), computed exactly by
/// enumerating the length-k ternary prefixes m/3^k in [lo, hi). Each prefix
/// maps digit-wise to a cell (a-bits, b-bits); the result is sorted.
std::vector<std::pair<std::int64_t, std::int64_t>> sample_cells(const Rational& lo, const Rational& hi, int k);

} // namespace sierp
