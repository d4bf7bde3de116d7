#include <doctest.h>

#include "frs/gf.hpp"
#include "frs/rng.hpp"

using namespace frs;

TEST_CASE("field arithmetic in F_17") {
    Gf f(17);
    CHECK(f.add(5, 13) == 1);
    CHECK(f.mul(0, 9) == 0);
    CHECK(f.sub(3, 11) == 9);

    // independent oracle for the inverse: enumerate x with 3x = 1 mod 17
    std::uint64_t expected = 0;
    for (std::uint64_t x = 1; x < 17; ++x)
        if ((3 * x) % 17 == 1) expected = x;
    CHECK(expected == 6);
    CHECK(f.div(1, 3) == expected);
    CHECK(f.inv(3) == expected);
}

TEST_CASE("division by zero is rejected") {
    Gf f(17);
    CHECK_THROWS_AS(f.div(4, 0), Error);
    try {
        f.div(4, 0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("composite moduli are rejected") {
    CHECK_THROWS_AS(Gf(16), Error);
    CHECK_THROWS_AS(primitive_element(16), Error);
    try {
        primitive_element(16);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrime);
    }
}

TEST_CASE("primitive elements are the smallest generators") {
    // oracle: check 3^t != 1 for 1 <= t < 16 by enumeration, and that no
    // smaller candidate generates
    Gf f17(17);
    for (std::uint64_t t = 1; t < 16; ++t) CHECK(f17.pow(3, t) != 1);
    CHECK(f17.pow(3, 16) == 1);
    CHECK(f17.pow(2, 8) == 1); // 2 is not a generator
    CHECK(primitive_element(17) == 3);

    // powers of 2 mod 5 are 2, 4, 3, 1
    Gf f5(5);
    CHECK(f5.pow(2, 1) == 2);
    CHECK(f5.pow(2, 2) == 4);
    CHECK(f5.pow(2, 3) == 3);
    CHECK(f5.pow(2, 4) == 1);
    CHECK(primitive_element(5) == 2);
}

TEST_CASE("ring axioms hold exhaustively for small fields") {
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 31ULL}) {
        Gf f(q);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                for (std::uint64_t c = 0; c < q; ++c) {
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
    }
}

TEST_CASE("generator powers sweep the multiplicative group") {
    for (std::uint64_t q : {3ULL, 5ULL, 17ULL, 31ULL}) {
        const std::uint64_t g = primitive_element(q);
        Gf f(q);
        std::vector<bool> seen(q, false);
        std::uint64_t x = 1;
        for (std::uint64_t t = 0; t + 1 < q; ++t) {
            CHECK(!seen[x]);
            seen[x] = true;
            x = f.mul(x, g);
        }
        CHECK(f.order(g) == q - 1);
    }
}

TEST_CASE("inverses agree with extended Euclid across a field sweep") {
    Gf f(61);
    for (std::uint64_t a = 1; a < 61; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("the operation counter tallies when enabled") {
    Gf f(17);
    FieldOpCounter::enabled = true;
    FieldOpCounter::reset();
    f.mul(3, 5);
    f.add(1, 2);
    CHECK(FieldOpCounter::count == 2);
    FieldOpCounter::enabled = false;
    f.mul(3, 5);
    CHECK(FieldOpCounter::count == 2);
}
