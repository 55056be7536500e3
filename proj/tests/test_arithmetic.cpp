#include "sierp/arithmetic.hpp"

#include "sierp/errors.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace sierp;

TEST_CASE("oplus: 3' + 4' = 7' and neutral element") {
    const auto& S = sierpinski_context();
    const SierpinskiPoint sum = oplus(S, forward(Rational(3)), forward(Rational(4)));
    CHECK(sum == forward(Rational(7)));
    CHECK(sum == SierpinskiPoint(Rational(3), Rational(0), Side::plus));

    auto rng = test_util::make_rng(31);
    const SierpinskiPoint zero = embed_natural(S, 0);
    CHECK(zero == SierpinskiPoint());
    for (int i = 0; i < 25; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 5000));
        CHECK(oplus(S, zero, x) == x);
        CHECK(ominus(S, x, x) == zero);
    }
    CHECK(oplus(S, forward(Rational(1)), forward(Rational(1))) == forward(Rational(2)));
}

TEST_CASE("odot, oslash and their neutral elements") {
    const auto& S = sierpinski_context();
    const SierpinskiPoint one = embed_natural(S, 1);
    CHECK(one == forward(Rational(1)));

    auto rng = test_util::make_rng(32);
    for (int i = 0; i < 25; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 5000));
        CHECK(odot(S, one, x) == x);
        CHECK(oslash(S, x, one) == x);
    }
    CHECK(odot(S, forward(Rational(2)), forward(Rational(3))) == forward(Rational(6)));
    CHECK_THROWS_AS(oslash(S, forward(Rational(5)), SierpinskiPoint()), DivisionByZeroPrime);
}

TEST_CASE("embed_natural: worked examples and the positive-side claim") {
    const auto& S = sierpinski_context();
    CHECK(embed_natural(S, 7) == SierpinskiPoint(Rational(3), Rational(0), Side::plus));
    CHECK(embed_natural(S, 0) == SierpinskiPoint());
    for (long n = 1; n <= 200; ++n) CHECK(embed_natural(S, n).side() == Side::plus);
}

TEST_CASE("power function") {
    const auto& S = sierpinski_context();
    auto rng = test_util::make_rng(33);
    for (int i = 0; i < 15; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 8));
        CHECK(power(S, x, 0) == embed_natural(S, 1));
        CHECK(power(S, x, 1) == x);
        CHECK(odot(S, power(S, x, 2), power(S, x, 3)) == power(S, x, 5));
    }
    CHECK(power(S, forward(Rational(2)), 3) == forward(Rational(8)));
}

TEST_CASE("homomorphism: f carries the induced operations to +,-,*,/") {
    const auto& S = sierpinski_context();
    auto rng = test_util::make_rng(34);
    for (int i = 0; i < 120; ++i) {
        const Rational xr = test_util::random_rational(rng, 1000);
        const Rational yr = test_util::random_rational(rng, 1000);
        const SierpinskiPoint x = forward(xr), y = forward(yr);
        CHECK(inverse(oplus(S, x, y)) == xr + yr);
        CHECK(inverse(ominus(S, x, y)) == xr - yr);
        CHECK(inverse(odot(S, x, y)) == xr * yr);
        if (!yr.is_zero()) CHECK(inverse(oslash(S, x, y)) == xr / yr);
    }
}

TEST_CASE("field axioms hold exactly on S, side tags included") {
    const auto& S = sierpinski_context();
    auto rng = test_util::make_rng(35);
    for (int i = 0; i < 40; ++i) {
        const SierpinskiPoint x = forward(test_util::random_rational(rng, 40));
        const SierpinskiPoint y = forward(test_util::random_rational(rng, 40));
        const SierpinskiPoint z = forward(test_util::random_rational(rng, 40));
        CHECK(oplus(S, x, y) == oplus(S, y, x));
        CHECK(odot(S, x, y) == odot(S, y, x));
        CHECK(oplus(S, oplus(S, x, y), z) == oplus(S, x, oplus(S, y, z)));
        CHECK(odot(S, odot(S, x, y), z) == odot(S, x, odot(S, y, z)));
        CHECK(odot(S, x, oplus(S, y, z)) == oplus(S, odot(S, x, y), odot(S, x, z)));
    }
}

TEST_CASE("multiplication is repeated addition on the embedded naturals") {
    const auto& S = sierpinski_context();
    for (long n = 0; n <= 20; ++n) {
        for (long m : {0L, 1L, 2L, 5L, 11L, 20L}) {
            SierpinskiPoint acc = SierpinskiPoint();
            const SierpinskiPoint mp = embed_natural(S, m);
            for (long k = 0; k < n; ++k) acc = oplus(S, acc, mp);
            CHECK(acc == odot(S, embed_natural(S, n), mp));
            CHECK(acc == embed_natural(S, n * m));
        }
    }
}

TEST_CASE("the identity context reproduces plain rational arithmetic") {
    const auto& R = real_context();
    CHECK(oplus(R, Rational(2, 3), Rational(1, 6)) == Rational(5, 6));
    CHECK(odot(R, Rational(2, 3), Rational(3, 2)) == Rational(1));
    CHECK(R.from_real(R.to_real(Rational(7, 4))) == Rational(7, 4));
}
