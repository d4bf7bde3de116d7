#pragma once

#include <cstdint>
#include <set>

#include "frs/subspace.hpp"

namespace frs {

/// Smallest degree budget D making the interpolation unknown count
/// s(D+1) + D + rn strictly exceed the N(m-s+1) vanishing constraints.
std::size_t interpolation_degree_budget(const FrsParams& params, std::size_t s);

/// Affine subspace of the code, of dimension at most s-1, containing every
/// codeword within decoding_radius(s, m, R) of g. Interpolates a nonzero
/// Q = A_0(X) + sum A_i(X) Y_i vanishing on all sliding windows of g, then
/// solves the resulting linear identity on the message coefficients.
/// Returns the empty sentinel when no message satisfies the identity (the
/// list is empty in that case).
AffineSubspace find_container(const FrsParams& params, const FoldedWord& g, std::size_t s);

/// Dimension-k affine subspace of the code containing the affine span of
/// `list`, padded with seeded random codeword directions. Isolates pruning
/// tests from interpolation.
AffineSubspace harness_container(const FrsParams& params, const std::set<FoldedWord>& list,
                                 std::size_t k, std::uint64_t seed);

} // namespace frs
