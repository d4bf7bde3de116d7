#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "frs/subspace.hpp"

namespace frs {

/// Coordinate census for one subspace: S_r holds the coordinates whose
/// conditioned space is nonempty of dimension r, weighted w_r = |S_r|(sr+1)
/// for r below the subspace dimension (the top level gets weight zero).
struct DimensionProfile {
    int k = 0;
    int s = 0;
    std::vector<std::vector<std::uint32_t>> coords_by_dim; // size k+1
    std::vector<std::uint64_t> weights;                    // size k+1
    std::uint64_t total_weight = 0;

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> out;
        out.reserve(coords_by_dim.size());
        for (const auto& c : coords_by_dim) out.push_back(c.size());
        return out;
    }

    /// sum_r r * |S_r|, the quantity bounded by k * (mR/(m-k+1)) * N.
    std::uint64_t dimension_mass() const;

    static std::vector<std::uint64_t> weights_from_sizes(const std::vector<std::size_t>& sizes,
                                                         int k, int s);
};

DimensionProfile dimension_profile(const FoldedWord& g, const AffineSubspace& container, int s);

/// One pass of the weighted-sampling pruner: walks down conditioned
/// subspaces, sampling the dimension bucket with probability w_r / W and a
/// coordinate uniformly inside it, until dimension zero. Every codeword of
/// the list inside the container comes out with probability >= 1/(sk+1).
std::optional<FoldedWord> rand_prune_once(const FoldedWord& g, const AffineSubspace& container,
                                          int s, std::uint64_t seed);

/// Number of independent repetitions guaranteeing full-list recovery with
/// probability 1 - beta: ceil((s(s-1)+1) ln(s/beta)).
std::uint64_t rand_decode_trials(int s, const Rational& beta);

/// Union of rand_decode_trials(s, beta) independent single passes.
std::set<FoldedWord> rand_decode(const FoldedWord& g, const AffineSubspace& container, int s,
                                 const Rational& beta, std::uint64_t seed);

/// Uniform-coordinate baseline: conditions on uniformly random coordinates
/// until dimension zero or a budget of 4k draws is spent; returns the
/// survivor when it lies within delta - eps of g.
std::optional<FoldedWord> krsw_prune(const FoldedWord& g, const AffineSubspace& container,
                                     const Rational& eps, const Rational& delta,
                                     std::uint64_t seed);

} // namespace frs
