#include "frs/randprune.hpp"

#include <cmath>

#include "frs/rng.hpp"

namespace frs {

std::uint64_t DimensionProfile::dimension_mass() const {
    std::uint64_t mass = 0;
    for (std::size_t r = 0; r < coords_by_dim.size(); ++r)
        mass += r * coords_by_dim[r].size();
    return mass;
}

std::vector<std::uint64_t> DimensionProfile::weights_from_sizes(
    const std::vector<std::size_t>& sizes, int k, int s) {
    std::vector<std::uint64_t> weights(sizes.size(), 0);
    for (std::size_t r = 0; r < sizes.size(); ++r) {
        if (static_cast<int>(r) == k) continue; // top level never sampled
        weights[r] = static_cast<std::uint64_t>(sizes[r]) *
                     (static_cast<std::uint64_t>(s) * r + 1);
    }
    return weights;
}

DimensionProfile dimension_profile(const FoldedWord& g, const AffineSubspace& container, int s) {
    const int k = container.dim();
    if (k < 0) fail(ErrorKind::BadParams, "cannot profile the empty space");
    if (k > s) fail(ErrorKind::BadParams, "container dimension exceeds s");

    DimensionProfile profile;
    profile.k = k;
    profile.s = s;
    profile.coords_by_dim.assign(static_cast<std::size_t>(k) + 1, {});
    for (std::size_t i = 0; i < container.params().block_len; ++i) {
        AffineSubspace conditioned = container.condition(g, i);
        if (conditioned.is_empty()) continue;
        profile.coords_by_dim[static_cast<std::size_t>(conditioned.dim())].push_back(
            static_cast<std::uint32_t>(i));
    }
    profile.weights = DimensionProfile::weights_from_sizes(profile.sizes(), k, s);
    profile.total_weight = 0;
    for (auto w : profile.weights) profile.total_weight += w;
    return profile;
}

namespace {

std::optional<FoldedWord> rand_prune_walk(const FoldedWord& g, const AffineSubspace& container,
                                          int s, const Rational& radius, Rng& rng) {
    const int k = container.dim();
    if (k == 0) {
        FoldedWord point = container.unique_point();
        if (folded_distance(point, g) < radius) return point;
        return std::nullopt;
    }

    const auto profile = dimension_profile(g, container, s);
    if (profile.total_weight == 0) return std::nullopt;

    std::uint64_t ticket = rng.below(profile.total_weight);
    std::size_t bucket = 0;
    while (ticket >= profile.weights[bucket]) {
        ticket -= profile.weights[bucket];
        ++bucket;
    }
    const auto& coords = profile.coords_by_dim[bucket];
    const std::uint32_t coordinate = coords[rng.below(coords.size())];
    return rand_prune_walk(g, container.condition(g, coordinate), s, radius, rng);
}

} // namespace

std::optional<FoldedWord> rand_prune_once(const FoldedWord& g, const AffineSubspace& container,
                                          int s, std::uint64_t seed) {
    if (container.is_empty()) return std::nullopt;
    const int k = container.dim();
    const auto& params = container.params();
    if (k > s || s > static_cast<int>(params.m))
        fail(ErrorKind::BadParams, "need dim(container) <= s <= m");
    const Rational radius = decoding_radius(static_cast<std::size_t>(s), params.m, params.rate());
    Rng rng(seed);
    return rand_prune_walk(g, container, s, radius, rng);
}

std::uint64_t rand_decode_trials(int s, const Rational& beta) {
    if (beta <= Rational(0) || beta >= Rational(1))
        fail(ErrorKind::BadParams, "beta must lie in (0, 1)");
    const double factor = static_cast<double>(s) * (s - 1) + 1;
    const double lg = std::log(static_cast<double>(s) / beta.to_double());
    return static_cast<std::uint64_t>(std::ceil(factor * lg));
}

std::set<FoldedWord> rand_decode(const FoldedWord& g, const AffineSubspace& container, int s,
                                 const Rational& beta, std::uint64_t seed) {
    const std::uint64_t trials = rand_decode_trials(s, beta);
    std::set<FoldedWord> found;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (auto hit = rand_prune_once(g, container, s, mix_seed(seed, {t})))
            found.insert(std::move(*hit));
    }
    return found;
}

std::optional<FoldedWord> krsw_prune(const FoldedWord& g, const AffineSubspace& container,
                                     const Rational& eps, const Rational& delta,
                                     std::uint64_t seed) {
    if (eps <= Rational(0) || eps >= delta)
        fail(ErrorKind::BadEpsilon, "eps must lie strictly between 0 and delta");
    if (container.is_empty()) return std::nullopt;

    const Rational radius = delta - eps;
    const std::size_t block_len = container.params().block_len;
    const int k = container.dim();
    Rng rng(seed);

    AffineSubspace current = container;
    std::size_t draws = 0;
    const std::size_t budget = 4 * static_cast<std::size_t>(k);
    while (current.dim() > 0) {
        if (draws >= budget) return std::nullopt;
        ++draws;
        const std::size_t i = static_cast<std::size_t>(rng.below(block_len));
        current = current.condition(g, i);
        if (current.is_empty()) return std::nullopt;
    }
    FoldedWord point = current.unique_point();
    if (folded_distance(point, g) < radius) return point;
    return std::nullopt;
}

} // namespace frs
