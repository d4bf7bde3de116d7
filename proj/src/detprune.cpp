#include "frs/detprune.hpp"

#include <unordered_map>

namespace frs {

namespace {

// marker for the empty space in popularity streams; cannot collide with
// canonical keys, which always start with a digit
const std::string kEmptyKey = "E";

struct Level {
    std::vector<AffineSubspace> spaces;                     // the vertex set V_r
    std::vector<std::string> keys;                          // parallel key stream
    std::unordered_map<std::string, AffineSubspace> reps;   // first occurrence per key

    void add(AffineSubspace space) {
        if (space.is_empty()) {
            keys.push_back(kEmptyKey);
        } else {
            std::string key = space.canonical_key();
            reps.try_emplace(key, space);
            keys.push_back(std::move(key));
        }
        spaces.push_back(std::move(space));
    }
};

void recurse_on_popular(const Level& level, const Rational& threshold, const FoldedWord& g,
                        const Rational& eps, const Rational& delta, const DetPruneConfig& config,
                        std::set<FoldedWord>& out) {
    for (const auto& key : heavy_hitters(level.keys, threshold)) {
        if (key == kEmptyKey) continue;
        auto sub = det_prune(g, eps, level.reps.at(key), delta, config);
        out.insert(sub.begin(), sub.end());
    }
}

} // namespace

std::vector<std::string> heavy_hitters(const std::vector<std::string>& stream,
                                       const Rational& threshold) {
    if (threshold <= Rational(0) || threshold > Rational(1))
        fail(ErrorKind::BadParams, "popularity threshold must lie in (0, 1]");
    if (stream.empty()) return {};

    // ceil(2 / threshold) counters, capped at the stream length (beyond
    // that Misra-Gries never evicts and is already exact)
    const __int128 wanted =
        (static_cast<__int128>(2) * threshold.den() + threshold.num() - 1) / threshold.num();
    const std::size_t counters =
        wanted > static_cast<__int128>(stream.size()) ? stream.size()
                                                      : static_cast<std::size_t>(wanted);

    std::unordered_map<std::string, std::size_t> table;
    table.reserve(counters * 2);
    for (const auto& key : stream) {
        auto it = table.find(key);
        if (it != table.end()) {
            ++it->second;
        } else if (table.size() < counters) {
            table.emplace(key, 1);
        } else {
            for (auto jt = table.begin(); jt != table.end();) {
                if (--jt->second == 0)
                    jt = table.erase(jt);
                else
                    ++jt;
            }
        }
    }

    // exact verification pass over the candidates
    std::unordered_map<std::string, std::size_t> exact;
    exact.reserve(table.size() * 2);
    for (auto& [key, _] : table) exact.emplace(key, 0);
    for (const auto& key : stream) {
        auto it = exact.find(key);
        if (it != exact.end()) ++it->second;
    }

    std::vector<std::string> popular;
    for (const auto& [key, count] : exact) {
        // count / |stream| >= threshold, exactly
        if (static_cast<__int128>(count) * threshold.den() >=
            static_cast<__int128>(threshold.num()) * stream.size())
            popular.push_back(key);
    }
    std::sort(popular.begin(), popular.end());
    return popular;
}

std::vector<Rational> popularity_thresholds(const Rational& eps, int k, std::int64_t divisor) {
    std::vector<Rational> thresholds(static_cast<std::size_t>(std::max(k, 0)));
    if (k <= 0) return thresholds;
    thresholds[static_cast<std::size_t>(k - 1)] = eps;
    for (int r = k - 2; r >= 0; --r) {
        const Rational& above = thresholds[static_cast<std::size_t>(r + 1)];
        thresholds[static_cast<std::size_t>(r)] = above * above / Rational(divisor);
    }
    return thresholds;
}

std::set<FoldedWord> det_prune(const FoldedWord& g, const Rational& eps,
                               const AffineSubspace& container, const Rational& delta,
                               const DetPruneConfig& config) {
    if (eps <= Rational(0) || eps >= delta)
        fail(ErrorKind::BadEpsilon, "eps must lie strictly between 0 and delta");
    if (container.is_empty()) return {};

    const int k = container.dim();
    if (k == 0) {
        FoldedWord point = container.unique_point();
        if (folded_distance(point, g) < delta - eps) return {point};
        return {};
    }

    std::set<FoldedWord> found;
    const std::size_t block_len = container.params().block_len;

    Level level;
    for (std::size_t i = 0; i < block_len; ++i) {
        AffineSubspace conditioned = container.condition(g, i);
        if (conditioned.dim() <= k - 1) level.add(std::move(conditioned));
    }

    Rational popularity = eps;
    recurse_on_popular(level, popularity / Rational(2), g, eps, delta, config, found);

    for (int r = k - 2; r >= 0; --r) {
        const Rational lambda = popularity / Rational(config.lambda_divisor);
        Level next;
        if (!level.spaces.empty()) {
            ExpanderGraph graph = build_expander(level.spaces.size(), lambda, config.expander);
            const auto& spaces = level.spaces;
            graph.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
                AffineSubspace meet =
                    (graph.is_dummy(u) || graph.is_dummy(v))
                        ? AffineSubspace::empty(container.params())
                        : spaces[u].intersect(spaces[v]);
                if (meet.dim() <= r) next.add(std::move(meet));
            });
        }
        popularity = popularity * popularity / Rational(config.popularity_divisor);
        recurse_on_popular(next, popularity / Rational(2), g, eps, delta, config, found);
        level = std::move(next);
    }

    return found;
}

} // namespace frs
