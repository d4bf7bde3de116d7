#include <doctest.h>

#include <sstream>

#include "frs/frs_code.hpp"
#include "frs/rng.hpp"

using namespace frs;

namespace {

Poly random_message(const FrsParams& params, Rng& rng) {
    std::vector<std::uint64_t> coeffs(params.rn);
    for (auto& c : coeffs) c = rng.below(params.q);
    return Poly(params.q, coeffs);
}

} // namespace

TEST_CASE("encoding folds the evaluation grid") {
    auto params = FrsParams::make(17, 8, 2, 2);
    CHECK(params.gamma == 3);
    CHECK(params.block_len == 4);

    // f = X evaluated at powers 3^0..3^7 mod 17, folded in pairs
    auto word = encode(params, Poly(17, {0, 1}));
    const std::vector<std::uint64_t> expected = {1, 3, 9, 10, 13, 5, 15, 11};
    CHECK(word.flat() == expected);

    auto zero = encode(params, Poly::zero(17));
    for (auto v : zero.flat()) CHECK(v == 0);

    auto constant = encode(params, Poly(17, {7}));
    for (auto v : constant.flat()) CHECK(v == 7);
}

TEST_CASE("encoding rejects degrees at the bound") {
    auto params = FrsParams::make(17, 8, 2, 2);
    CHECK_THROWS_AS(encode(params, Poly(17, {0, 0, 1})), Error);
    try {
        encode(params, Poly(17, {0, 0, 1}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeTooHigh);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FrsParams::make(16, 8, 2, 2), Error);   // composite q
    CHECK_THROWS_AS(FrsParams::make(17, 9, 2, 2), Error);   // m does not divide n
    CHECK_THROWS_AS(FrsParams::make(17, 17, 1, 2), Error);  // q must exceed n
    CHECK_THROWS_AS(FrsParams::make(17, 8, 2, 8), Error);   // rn at n is too high
    CHECK_THROWS_AS(FrsParams::make_with_gamma(17, 8, 2, 2, 16), Error); // order 2
}

TEST_CASE("folded distance counts differing symbols") {
    auto params = FrsParams::make(17, 8, 2, 2);
    auto u = encode(params, Poly(17, {0, 1}));
    CHECK(folded_distance(u, u) == Rational(0));

    auto v = u;
    v.at(2, 0) = (v.at(2, 0) + 1) % 17;
    CHECK(folded_distance(u, v) == Rational(1, 4));

    FoldedWord other(17, 2, 3);
    CHECK_THROWS_AS(folded_distance(u, other), Error);
}

TEST_CASE("distinct codewords of a folded code sit at full distance") {
    // Rn=2, m=2: agreement columns <= floor((Rn-1)/m) = 0, so distance 1
    auto params = FrsParams::make(17, 8, 2, 2);
    Rng rng(0x5151ULL);
    for (int round = 0; round < 60; ++round) {
        auto f = random_message(params, rng);
        auto g = random_message(params, rng);
        if (f == g) continue;
        CHECK(folded_distance(encode(params, f), encode(params, g)) == Rational(1));
    }
}

TEST_CASE("codeword agreement respects the root budget") {
    auto params = FrsParams::make(31, 30, 3, 7);
    const std::size_t max_agree = (params.rn - 1) / params.m;
    Rng rng(0x77ULL);
    for (int round = 0; round < 40; ++round) {
        auto f = random_message(params, rng);
        auto g = random_message(params, rng);
        if (f == g) continue;
        auto cf = encode(params, f), cg = encode(params, g);
        std::size_t agree = 0;
        for (std::size_t i = 0; i < params.block_len; ++i)
            if (cf.symbol_equal(cg, i)) ++agree;
        CHECK(agree <= max_agree);
    }
}

TEST_CASE("encoding is linear") {
    auto params = FrsParams::make(31, 30, 3, 7);
    Gf field(31);
    Rng rng(0x99ULL);
    for (int round = 0; round < 25; ++round) {
        auto f = random_message(params, rng);
        auto g = random_message(params, rng);
        const std::uint64_t a = rng.below(31), b = rng.below(31);
        auto combo = encode(params, f.scale(a).add(g.scale(b)));
        auto cf = encode(params, f), cg = encode(params, g);
        for (std::size_t i = 0; i < combo.flat().size(); ++i)
            CHECK(combo.flat()[i] ==
                  field.add(field.mul(a, cf.flat()[i]), field.mul(b, cg.flat()[i])));
    }
}

TEST_CASE("corruption hits exactly the requested symbols") {
    auto params = FrsParams::make(61, 36, 3, 5);
    Rng rng(0x31337ULL);
    auto word = encode(params, random_message(params, rng));

    CHECK(corrupt(word, 0, 5) == word);
    CHECK(folded_distance(corrupt(word, 12, 5), word) == Rational(1));
    CHECK(folded_distance(corrupt(word, 3, 5), word) == Rational(3, 12));
    CHECK(corrupt(word, 4, 123) == corrupt(word, 4, 123)); // seed-deterministic
    CHECK(corrupt(word, 4, 123) != corrupt(word, 4, 124));
    CHECK_THROWS_AS(corrupt(word, 13, 5), Error);

    for (std::uint64_t seed = 0; seed < 30; ++seed)
        CHECK(folded_distance(corrupt(word, 5, seed), word) == Rational(5, 12));
}

TEST_CASE("decoding radius formula") {
    // s=1 degenerates to half the distance
    CHECK(decoding_radius(1, 4, Rational(1, 4)) == (Rational(1) - Rational(1, 4)) / Rational(2));
    CHECK(decoding_radius(2, 4, Rational(1, 4)) == Rational(4, 9)); // (2/3)(1 - 1/3)
    // s = 1/eps, m = s^2 puts the radius above 1 - R - eps
    const Rational eps(1, 4);
    const Rational rate(1, 2);
    CHECK(decoding_radius(4, 16, rate) >= Rational(1) - rate - eps);
    CHECK_THROWS_AS(decoding_radius(5, 4, Rational(1, 4)), Error);
}

TEST_CASE("message recovery from codewords") {
    auto params = FrsParams::make(31, 30, 3, 7);
    Rng rng(0x1221ULL);
    auto f = random_message(params, rng);
    auto word = encode(params, f);
    auto back = decode_message(params, word);
    REQUIRE(back.has_value());
    CHECK(*back == f);

    auto noisy = corrupt(word, 3, 9);
    CHECK(!decode_message(params, noisy).has_value());
}

TEST_CASE("word files are bit-exact") {
    auto params = FrsParams::make(17, 8, 2, 2);
    auto word = encode(params, Poly(17, {0, 1}));
    std::ostringstream out;
    write_word(out, word);
    CHECK(out.str() == "17 8 2 4\n1 3\n9 10\n13 5\n15 11\n");
    std::istringstream in(out.str());
    CHECK(read_word(in) == word);
}
