#pragma once

#include <set>
#include <string>
#include <vector>

#include "frs/expander.hpp"
#include "frs/subspace.hpp"

namespace frs {

struct DetPruneConfig {
    // popularity recurrence p_r = p_{r+1}^2 / popularity_divisor, and the
    // expander target lambda = p_{r+1} / lambda_divisor
    std::int64_t popularity_divisor = 32;
    std::int64_t lambda_divisor = 24;
    ExpanderOptions expander;
};

/// Keys whose exact frequency in the stream is at least `threshold` times
/// the stream length: one Misra-Gries pass with ceil(2/threshold) counters,
/// then an exact verification count over the surviving candidates.
std::vector<std::string> heavy_hitters(const std::vector<std::string>& stream,
                                       const Rational& threshold);

/// Popularity thresholds p_{k-1} = eps, p_r = p_{r+1}^2 / divisor, indexed
/// so that result[r] is the threshold at level r.
std::vector<Rational> popularity_thresholds(const Rational& eps, int k, std::int64_t divisor);

/// Deterministic pruning for a distance-`delta` linear code: all codewords
/// of H within folded distance delta - eps of the received word. Popular
/// conditioned spaces are pruned recursively; the remaining levels
/// intersect along expander edges and recurse on popular intersections.
std::set<FoldedWord> det_prune(const FoldedWord& g, const Rational& eps,
                               const AffineSubspace& container, const Rational& delta,
                               const DetPruneConfig& config = {});

} // namespace frs
