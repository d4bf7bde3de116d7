#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frs/frs_code.hpp"
#include "frs/linalg.hpp"

namespace frs {

std::uint64_t default_enumeration_budget();

/// Ambient coordinate frame for a family of affine subspaces: the outermost
/// basis (base + k independent direction words) every derived subspace is
/// expressed against. Points are base + sum_i alpha_i * dir_i.
struct SubspaceFrame {
    FrsParams params;
    FoldedWord base;
    std::vector<FoldedWord> directions;

    std::size_t dimension() const { return directions.size(); }
};

/// An affine subset of the codeword space, dual-represented: the shared
/// frame provides the basis form, and each instance carries an RREF
/// constraint system over the frame variables (alpha_1..alpha_k | rhs).
/// The empty set is a sentinel, never a basis.
///
/// Constraint systems are kept in RREF with a fixed variable order, so two
/// instances over the same frame describe the same point set exactly when
/// their systems are identical; canonical_key() serializes that form.
class AffineSubspace {
public:
    /// The whole frame (no constraints). Directions must be independent.
    static AffineSubspace whole(std::shared_ptr<const SubspaceFrame> frame);
    static AffineSubspace empty(const FrsParams& params);

    bool is_empty() const { return empty_; }

    /// Empty reports -1 so that every `dim <= r` level test admits it
    /// (all levels r are nonnegative).
    int dim() const;

    const FrsParams& params() const { return params_; }
    const std::shared_ptr<const SubspaceFrame>& frame() const { return frame_; }

    /// {h in H : h(symbol) = g(symbol)} — appends the m coordinate
    /// constraints and re-reduces.
    AffineSubspace condition(const FoldedWord& g, std::size_t symbol) const;

    /// Exact set intersection; both operands must share the frame.
    AffineSubspace intersect(const AffineSubspace& other) const;

    /// Key equality <=> set equality (same frame). Nonempty only.
    std::string canonical_key() const;

    /// All q^dim points. Guarded by the enumeration budget.
    std::set<FoldedWord> enumerate(std::uint64_t budget = default_enumeration_budget()) const;

    /// The single member of a zero-dimensional subspace.
    FoldedWord unique_point() const;

    bool contains(const FoldedWord& word) const;

    /// Basis extracted from the constraint system: base point plus dim()
    /// independent direction words.
    SubspaceFrame extract_basis() const;

    /// Point for an explicit assignment of the frame variables.
    FoldedWord point_at(const std::vector<std::uint64_t>& alpha) const;

    friend bool operator==(const AffineSubspace& a, const AffineSubspace& b);

private:
    AffineSubspace() = default;

    AffineSubspace reduced_with(FqMatrix combined) const;
    std::optional<std::vector<std::uint64_t>> frame_coordinates(const FoldedWord& word) const;

    std::shared_ptr<const SubspaceFrame> frame_; // null for empty sentinel
    FrsParams params_;
    FqMatrix system_; // RREF, cols = frame dim + 1 (augmented)
    bool empty_ = false;
};

/// Subspace file: header "q k", then k+1 word blocks (base point, then
/// directions) in the word file format.
void write_subspace(std::ostream& out, const AffineSubspace& space);
AffineSubspace read_subspace(std::istream& in, const FrsParams& params);

} // namespace frs
