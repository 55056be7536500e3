#include "sierp/sierpinski.hpp"

#include "sierp/errors.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace sierp;

namespace {
SierpinskiPoint point(long an, long ad, long bn, long bd, Side s) {
    return SierpinskiPoint(Rational(an, ad), Rational(bn, bd), s);
}
} // namespace

TEST_CASE("forward: the paper's worked identities") {
    CHECK(forward(Rational(2)) == point(1, 1, 1, 1, Side::plus));
    CHECK(forward(Rational(5, 2)) == point(1, 1, 1, 1, Side::minus));
    CHECK(forward(Rational(0)) == SierpinskiPoint());
    CHECK(forward(Rational(0)).side() == Side::neutral);
    CHECK(forward(Rational(1)) == point(1, 1, 0, 1, Side::plus));
    CHECK(forward(Rational(3)) == point(2, 1, 0, 1, Side::plus));
    CHECK(forward(Rational(4)) == point(1, 1, 2, 1, Side::plus));
    CHECK(forward(Rational(7)) == point(3, 1, 0, 1, Side::plus));
}

TEST_CASE("inverse: worked identities and error cases") {
    CHECK(inverse(Rational(1), Rational(1), Side::plus) == Rational(2));
    CHECK(inverse(Rational(1), Rational(1), Side::minus) == Rational(5, 2));
    CHECK(inverse(SierpinskiPoint()) == Rational(0));
    // (1/2, 1/2) is an ambiguous (case C) pair: the neutral tag contradicts it
    CHECK_THROWS_AS(inverse(Rational(1, 2), Rational(1, 2), Side::neutral), InconsistentSide);
    CHECK(inverse(Rational(1, 2), Rational(1, 2), Side::plus) == Rational(2, 3));
    CHECK(inverse(Rational(1, 2), Rational(1, 2), Side::minus) == Rational(5, 6));
    // 1/3 = (0.(01))_2 against itself collides at every other position
    CHECK_THROWS_AS(inverse(Rational(1, 3), Rational(1, 3), Side::neutral), NotInSet);
    // (1, 0) exists only on the plus sheet
    CHECK_THROWS_AS(inverse(Rational(1), Rational(0), Side::minus), InconsistentSide);
    CHECK_THROWS_AS(inverse(Rational(1), Rational(2), Side::neutral), InconsistentSide);
    CHECK_THROWS_AS(inverse(Rational(1), Rational(-1), Side::neutral), NotInSet);
}

TEST_CASE("classify_side") {
    CHECK(classify_side(Rational(1), Rational(1)) == PairClass::case_C);
    CHECK(classify_side(Rational(0), Rational(0)) == PairClass::case_B);
    CHECK(classify_side(Rational(1, 3), Rational(1, 3)) == PairClass::not_in_S);
    CHECK(classify_side(Rational(1, 3), Rational(0)) == PairClass::case_B);
    CHECK(classify_side(Rational(1, 2), Rational(1, 2)) == PairClass::case_C);
    CHECK(classify_side(Rational(1), Rational(0)) == PairClass::case_C);
    CHECK(classify_side(Rational(-1), Rational(2)) == PairClass::not_in_S);
}

TEST_CASE("bijection round trip on random rationals") {
    auto rng = test_util::make_rng(21);
    for (int i = 0; i < 250; ++i) {
        const Rational x = test_util::random_rational(rng, 1000000);
        CHECK(inverse(forward(x)) == x);
    }
}

TEST_CASE("bijection round trip on case-C values") {
    auto rng = test_util::make_rng(22);
    std::uniform_int_distribution<long> nd(0, 8), kd(0, 500);
    for (int i = 0; i < 120; ++i) {
        long p3 = 1;
        for (int j = std::uniform_int_distribution<int>(1, 10)(rng); j > 0; --j) p3 *= 3;
        // terminating ternary (canonical form ends in (2)_3) and (1)_3-tail values
        const Rational terminating = Rational(nd(rng)) + Rational(kd(rng) % p3, p3);
        const Rational one_tail = terminating + Rational(1, 2 * p3);
        for (Rational x : {terminating, one_tail, -terminating, -one_tail}) {
            CHECK(inverse(forward(x)) == x);
        }
    }
    // (1)_3-tail values land on the minus sheet
    CHECK(forward(Rational(1, 2)).side() == Side::minus);
    CHECK(forward(Rational(5, 2)).side() == Side::minus);
    CHECK(forward(Rational(5, 6)).side() == Side::minus);
}

TEST_CASE("oddness: forward(-x) = -forward(x), side kept") {
    auto rng = test_util::make_rng(23);
    for (int i = 0; i < 60; ++i) {
        const Rational x = test_util::random_rational(rng, 100000, false);
        const SierpinskiPoint p = forward(x);
        const SierpinskiPoint q = forward(-x);
        CHECK(q == -p);
        CHECK(q.side() == p.side());
        CHECK(q.a() == -p.a());
        CHECK(q.b() == -p.b());
    }
}

TEST_CASE("no aligned position of a forward image is (1,1)") {
    auto rng = test_util::make_rng(24);
    for (int i = 0; i < 80; ++i) {
        const Rational x = test_util::random_rational(rng, 100000);
        const SierpinskiPoint p = forward(x);
        auto [ra, rb] = align(p.raw_a(), p.raw_b());
        auto clash = [](const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v) {
            for (std::size_t j = 0; j < u.size(); ++j)
                if (u[j] == 1 && v[j] == 1) return true;
            return false;
        };
        CHECK(!clash(ra.int_digits, rb.int_digits));
        CHECK(!clash(ra.pre_frac, rb.pre_frac));
        CHECK(!clash(ra.period, rb.period));
    }
}

TEST_CASE("discontinuity witness at x = 1 and continuity at x = 0") {
    for (int n = 1; n <= 12; ++n) {
        long p3 = 1;
        for (int j = 0; j < n; ++j) p3 *= 3;
        const SierpinskiPoint above = forward(Rational(1) + Rational(1, p3));
        CHECK(above.side() == Side::plus);
        CHECK(above.b() == Rational(1));
        CHECK(std::fabs(above.a().to_double()) <= std::pow(2.0, -n));

        const SierpinskiPoint below = forward(Rational(1) - Rational(1, p3));
        CHECK(below.side() == Side::plus);
        CHECK(std::fabs(below.a().to_double() - 1.0) <= std::pow(2.0, 1 - n));
        CHECK(std::fabs(below.b().to_double()) <= std::pow(2.0, 1 - n));

        for (int sgn : {1, -1}) {
            const SierpinskiPoint near_zero = forward(Rational(sgn, p3));
            CHECK(std::fabs(near_zero.a().to_double()) <= std::pow(2.0, 1 - n));
            CHECK(std::fabs(near_zero.b().to_double()) <= std::pow(2.0, 1 - n));
        }
    }
}

TEST_CASE("sample_cells: counts and the k = 1 cell set") {
    const auto cells1 = sample_cells(Rational(0), Rational(1), 1);
    const std::set<std::pair<std::int64_t, std::int64_t>> expected{{0, 0}, {0, 1}, {1, 0}};
    CHECK(std::set<std::pair<std::int64_t, std::int64_t>>(cells1.begin(), cells1.end()) == expected);

    long p3 = 1;
    for (int k = 1; k <= 10; ++k) {
        p3 *= 3;
        CHECK(static_cast<long>(sample_cells(Rational(0), Rational(1), k).size()) == p3);
    }
    CHECK(sample_cells(Rational(0), Rational(0), 1).empty());
    CHECK_THROWS_AS(sample_cells(Rational(0), Rational(1), 0), InvalidResolution);
    // cells are distinct: the digit map is injective on prefixes
    const auto cells5 = sample_cells(Rational(0), Rational(1), 5);
    CHECK(std::set<std::pair<std::int64_t, std::int64_t>>(cells5.begin(), cells5.end()).size() == cells5.size());
}

TEST_CASE("point text form round trips") {
    CHECK(forward(Rational(2)).str() == "(1, 1)+");
    CHECK(forward(Rational(0)).str() == "(0, 0)0");
    CHECK(forward(Rational(5, 2)).str() == "(1, 1)-");
    CHECK(SierpinskiPoint::parse("(1, 1)-") == forward(Rational(5, 2)));
    CHECK(SierpinskiPoint::parse("(-1/3, 0)0").str() == "(-1/3, 0)0");
    CHECK(SierpinskiPoint::parse("(-1/3, 0)0") == forward(Rational(-1, 4)));
    CHECK_THROWS(SierpinskiPoint::parse("(1, 1)"));
    CHECK_THROWS(SierpinskiPoint::parse("1, 1+"));

    auto rng = test_util::make_rng(25);
    for (int i = 0; i < 40; ++i) {
        const SierpinskiPoint p = forward(test_util::random_rational(rng, 5000));
        CHECK(SierpinskiPoint::parse(p.str()) == p);
    }
}
