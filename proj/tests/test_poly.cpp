#include <doctest.h>

#include "frs/poly.hpp"
#include "frs/rng.hpp"

using namespace frs;

TEST_CASE("evaluation by Horner") {
    Poly f(17, {1, 0, 1}); // X^2 + 1
    CHECK(f.eval(4) == 0);  // 16 + 1 = 0 mod 17
    CHECK(Poly::zero(17).eval(9) == 0);
    CHECK(Poly(17, {7}).eval(13) == 7);
}

TEST_CASE("geometric evaluation walks the powers of gamma") {
    Poly x(17, {0, 1});
    auto values = x.eval_geometric(3, 4);
    CHECK(values == std::vector<std::uint64_t>{1, 3, 9, 10}); // powers of 3 mod 17

    Poly one(17, {1});
    CHECK(one.eval_geometric(5, 3) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("geometric evaluation rejects low-order points") {
    // 16 has order 2 in F_17
    Poly f(17, {2, 5});
    CHECK_THROWS_AS(f.eval_geometric(16, 4), Error);
    try {
        f.eval_geometric(16, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderTooSmall);
    }
    CHECK_NOTHROW(f.eval_geometric(16, 2));
}

TEST_CASE("normalization trims trailing zeros") {
    Poly f(17, {4, 2, 0, 0});
    CHECK(f.degree() == 1);
    CHECK(Poly(17, {0, 0}).is_zero());
    CHECK(Poly::zero(17).degree() == -1);
}

TEST_CASE("evaluation is linear") {
    Rng rng(0xfeedULL);
    const std::uint64_t q = 31;
    Gf field(q);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::uint64_t> fc(5), gc(7);
        for (auto& c : fc) c = rng.below(q);
        for (auto& c : gc) c = rng.below(q);
        Poly f(q, fc), g(q, gc);
        const std::uint64_t a = rng.below(q), b = rng.below(q), x = rng.below(q);
        Poly combo = f.scale(a).add(g.scale(b));
        CHECK(combo.eval(x) == field.add(field.mul(a, f.eval(x)), field.mul(b, g.eval(x))));
    }
}

TEST_CASE("a nonzero polynomial has at most deg roots on the grid") {
    Rng rng(0xabcdULL);
    const std::uint64_t q = 17;
    const std::uint64_t gamma = primitive_element(q);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::uint64_t> coeffs(4);
        for (auto& c : coeffs) c = rng.below(q);
        Poly f(q, coeffs);
        if (f.is_zero()) continue;
        int roots = 0;
        for (auto v : f.eval_geometric(gamma, 16))
            if (v == 0) ++roots;
        CHECK(roots <= f.degree());
    }
}

TEST_CASE("serialization round-trips") {
    Poly f(17, {3, 0, 12});
    CHECK(f.serialize() == "3 0 12");
    CHECK(Poly::parse(17, "3 0 12") == f);
    CHECK(Poly::parse(17, "") == Poly::zero(17));
}
