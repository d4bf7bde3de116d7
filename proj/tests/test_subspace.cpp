#include <doctest.h>

#include <sstream>

#include "frs/rng.hpp"
#include "frs/subspace.hpp"

using namespace frs;

namespace {

// q=5, n=4, m=2, N=2; direction d1 vanishes on symbol 0, d2 on symbol 1
struct PlaneFixture {
    FrsParams params = FrsParams::make(5, 4, 2, 3);
    Poly base_poly{5, {1, 1, 0}};
    Poly d1_poly{5, {2, 2, 1}}; // (X-1)(X-2)
    Poly d2_poly{5, {2, 3, 1}}; // (X-4)(X-3)
    std::shared_ptr<SubspaceFrame> frame;
    AffineSubspace whole = AffineSubspace::empty(params);

    PlaneFixture() {
        frame = std::make_shared<SubspaceFrame>();
        frame->params = params;
        frame->base = encode(params, base_poly);
        frame->directions = {encode(params, d1_poly), encode(params, d2_poly)};
        whole = AffineSubspace::whole(frame);
    }

    FoldedWord point(std::uint64_t a1, std::uint64_t a2) const {
        return whole.point_at({a1, a2});
    }
};

std::set<FoldedWord> filter_by_symbol(const std::set<FoldedWord>& points, const FoldedWord& g,
                                      std::size_t symbol) {
    std::set<FoldedWord> out;
    for (const auto& p : points)
        if (p.symbol_equal(g, symbol)) out.insert(p);
    return out;
}

std::set<FoldedWord> set_intersection(const std::set<FoldedWord>& a,
                                      const std::set<FoldedWord>& b) {
    std::set<FoldedWord> out;
    for (const auto& p : a)
        if (b.count(p)) out.insert(p);
    return out;
}

} // namespace

TEST_CASE("direction vanishing controls the conditioned dimension") {
    PlaneFixture fx;
    // a line with its single direction d1, which vanishes on symbol 0
    auto frame = std::make_shared<SubspaceFrame>();
    frame->params = fx.params;
    frame->base = encode(fx.params, fx.base_poly);
    frame->directions = {encode(fx.params, fx.d1_poly)};
    auto line = AffineSubspace::whole(frame);
    REQUIRE(line.dim() == 1);

    // active direction at symbol 1: one constraint eats the free variable
    auto g = line.point_at({3});
    auto pinned = line.condition(g, 1);
    CHECK(pinned.dim() == 0);
    CHECK(pinned.unique_point() == g);

    // vacuous constraint: direction is zero there and the base already agrees
    auto same = line.condition(g, 0);
    CHECK(same.dim() == 1);
    CHECK(same.canonical_key() == line.canonical_key());

    // inconsistent constraint: direction zero, base disagrees
    auto g_bad = g;
    g_bad.at(0, 0) = (g_bad.at(0, 0) + 1) % 5;
    auto nothing = line.condition(g_bad, 0);
    CHECK(nothing.is_empty());
    CHECK(nothing.dim() == -1);
}

TEST_CASE("intersections match the enumeration oracle in the plane") {
    PlaneFixture fx;
    REQUIRE(fx.whole.dim() == 2);
    auto all_points = fx.whole.enumerate();
    REQUIRE(all_points.size() == 25);

    CHECK(fx.whole.intersect(fx.whole) == fx.whole);

    Gf field(5);
    // conditioning at symbol 0 leaves alpha_1 free: the line {alpha_2 = c}
    auto line_at = [&](std::uint64_t c) {
        FoldedWord g = fx.point(0, c);
        return fx.whole.condition(g, 0);
    };
    auto line_a = line_at(2);
    auto line_b = line_at(4);
    REQUIRE(line_a.dim() == 1);
    CHECK(line_a.intersect(line_b).is_empty()); // parallel distinct lines

    // conditioning at symbol 1 pins alpha_1
    FoldedWord g_c = fx.point(3, 0);
    auto line_c = fx.whole.condition(g_c, 1);
    REQUIRE(line_c.dim() == 1);

    auto meet = line_a.intersect(line_c);
    REQUIRE(meet.dim() == 0);
    auto expected = set_intersection(line_a.enumerate(), line_c.enumerate());
    REQUIRE(expected.size() == 1);
    CHECK(meet.enumerate() == expected);
    CHECK(meet.unique_point() == fx.point(3, 2));
}

TEST_CASE("ambient mismatch is rejected") {
    PlaneFixture fx1, fx2;
    fx2.frame->base = encode(fx2.params, Poly(5, {2, 1, 0}));
    auto other = AffineSubspace::whole(fx2.frame);
    CHECK_THROWS_AS(fx1.whole.intersect(other), Error);
    try {
        fx1.whole.intersect(other);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AmbientMismatch);
    }
}

TEST_CASE("canonical keys equal exactly when the sets are equal") {
    PlaneFixture fx;
    FoldedWord g = fx.point(1, 3);
    auto line1 = fx.whole.condition(g, 0);
    auto line2 = line1.intersect(fx.whole);      // same set, different derivation
    CHECK(line1.enumerate() == line2.enumerate()); // oracle first
    CHECK(line1.canonical_key() == line2.canonical_key());

    // a singleton's key is determined by the point alone
    auto point_a = fx.whole.condition(g, 0).intersect(fx.whole.condition(g, 1));
    auto point_b = fx.whole.condition(g, 1).intersect(fx.whole.condition(g, 0));
    REQUIRE(point_a.dim() == 0);
    CHECK(point_a.enumerate() == point_b.enumerate());
    CHECK(point_a.canonical_key() == point_b.canonical_key());

    // sets differing in one point get distinct keys
    auto other = fx.whole.condition(fx.point(1, 4), 0);
    CHECK(line1.enumerate() != other.enumerate());
    CHECK(line1.canonical_key() != other.canonical_key());

    // stability: recomputation is bit-identical
    CHECK(line1.canonical_key() == line1.canonical_key());
}

TEST_CASE("enumeration counts and budget") {
    PlaneFixture fx;
    CHECK(fx.whole.enumerate().size() == 25);
    FoldedWord g = fx.point(2, 2);
    auto point = fx.whole.condition(g, 0).intersect(fx.whole.condition(g, 1));
    CHECK(point.enumerate().size() == 1);

    // q=17, k=4 against a budget of 10^4
    auto params = FrsParams::make(17, 16, 2, 8);
    auto frame = std::make_shared<SubspaceFrame>();
    frame->params = params;
    frame->base = encode(params, Poly::zero(17));
    for (int d = 0; d < 4; ++d) {
        std::vector<std::uint64_t> mono(static_cast<std::size_t>(d) + 1, 0);
        mono.back() = 1;
        frame->directions.push_back(encode(params, Poly(17, mono)));
    }
    auto big = AffineSubspace::whole(frame);
    CHECK_THROWS_AS(big.enumerate(10000), Error);
    try {
        big.enumerate(10000);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("dependent frame directions are rejected") {
    PlaneFixture fx;
    auto frame = std::make_shared<SubspaceFrame>();
    frame->params = fx.params;
    frame->base = encode(fx.params, fx.base_poly);
    frame->directions = {encode(fx.params, fx.d1_poly), encode(fx.params, fx.d1_poly.scale(3))};
    CHECK_THROWS_AS(AffineSubspace::whole(frame), Error);
}

TEST_CASE("conditioning and intersection agree with enumeration on random spaces") {
    auto params = FrsParams::make(17, 16, 2, 6);
    Rng rng(0xcafeULL);
    auto random_word = [&](void) {
        FoldedWord w(params.q, params.m, params.block_len);
        for (auto& v : w.flat()) v = rng.below(params.q);
        return w;
    };

    for (int round = 0; round < 20; ++round) {
        // random 2-dimensional frame (q^2 = 289 points)
        auto frame = std::make_shared<SubspaceFrame>();
        frame->params = params;
        std::vector<std::uint64_t> coeffs(params.rn);
        for (auto& c : coeffs) c = rng.below(params.q);
        frame->base = encode(params, Poly(params.q, coeffs));
        FqMatrix span(0, params.rn, params.q);
        while (frame->directions.size() < 2) {
            for (auto& c : coeffs) c = rng.below(params.q);
            FqMatrix probe = span;
            probe.append_row(coeffs);
            if (rank_of(probe) > span.rows) {
                span.append_row(coeffs);
                frame->directions.push_back(encode(params, Poly(params.q, coeffs)));
            }
        }
        auto space = AffineSubspace::whole(frame);
        auto points = space.enumerate();

        // walk a few random conditionings, mixing in codeword-consistent
        // received words so nonempty results show up often
        for (int step = 0; step < 3 && !space.is_empty(); ++step) {
            FoldedWord g = (rng.below(2) == 0)
                               ? *std::next(points.begin(),
                                            static_cast<long>(rng.below(points.size())))
                               : random_word();
            const std::size_t i = static_cast<std::size_t>(rng.below(params.block_len));
            auto conditioned = space.condition(g, i);
            auto expected = filter_by_symbol(space.is_empty() ? std::set<FoldedWord>{}
                                                              : space.enumerate(),
                                             g, i);
            if (conditioned.is_empty()) {
                CHECK(expected.empty());
            } else {
                CHECK(conditioned.enumerate() == expected);
                CHECK(conditioned.dim() <= space.dim());
                CHECK(conditioned.dim() >= space.dim() - static_cast<int>(params.m));
                for (const auto& p : expected) CHECK(conditioned.contains(p));
            }
            space = conditioned;
        }

        // intersections of two conditioned spaces
        auto whole = AffineSubspace::whole(frame);
        auto g1 = random_word();
        auto g2 = random_word();
        auto h1 = whole.condition(g1, 0);
        auto h2 = whole.condition(g2, 1);
        auto expected = set_intersection(h1.is_empty() ? std::set<FoldedWord>{} : h1.enumerate(),
                                         h2.is_empty() ? std::set<FoldedWord>{} : h2.enumerate());
        auto meet = h1.intersect(h2);
        if (meet.is_empty()) {
            CHECK(expected.empty());
        } else {
            CHECK(meet.enumerate() == expected);
            CHECK(meet.dim() <= std::min(h1.dim(), h2.dim()));
        }
    }
}

TEST_CASE("membership testing rejects outsiders") {
    PlaneFixture fx;
    for (const auto& p : fx.whole.enumerate()) CHECK(fx.whole.contains(p));
    FoldedWord stray = fx.point(0, 0);
    stray.at(0, 0) = (stray.at(0, 0) + 1) % 5;
    stray.at(1, 1) = (stray.at(1, 1) + 2) % 5;
    // not in the plane (it is not even a consistent frame combination)
    CHECK(fx.whole.condition(stray, 0).intersect(fx.whole.condition(stray, 1)).is_empty());
}

TEST_CASE("subspace files round-trip the point set") {
    PlaneFixture fx;
    FoldedWord g = fx.point(4, 1);
    auto line = fx.whole.condition(g, 0);
    std::ostringstream out;
    write_subspace(out, line);
    std::istringstream in(out.str());
    auto loaded = read_subspace(in, fx.params);
    CHECK(loaded.dim() == line.dim());
    CHECK(loaded.enumerate() == line.enumerate());
}

TEST_CASE("basis extraction spans the constrained set") {
    PlaneFixture fx;
    FoldedWord g = fx.point(2, 3);
    auto line = fx.whole.condition(g, 1);
    REQUIRE(line.dim() == 1);
    auto basis = line.extract_basis();
    CHECK(basis.directions.size() == 1);
    auto rebuilt = AffineSubspace::whole(std::make_shared<SubspaceFrame>(basis));
    CHECK(rebuilt.enumerate() == line.enumerate());
}
