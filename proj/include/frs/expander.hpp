#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "frs/rational.hpp"

namespace frs {

struct ExpanderOptions {
    /// Switches on the seeded random regular provider (degree 16/lambda^2)
    /// for sizes where powered Gabber-Galil degrees are hopeless but the
    /// complete graph is too dense.
    bool allow_random_regular = false;
    std::uint64_t seed = 0;
    std::size_t certification_budget = 4096;
};

/// A d-regular multigraph on an indexed vertex set with a certified bound
/// on the second eigenvalue of its normalized adjacency matrix. Vertices
/// [0, logical) are the caller's; [logical, padded) are padding and the
/// caller treats edges touching them as carrying the empty subspace.
class ExpanderGraph {
public:
    enum class Kind { gabber_galil_power, complete, random_regular, explicit_edges };

    static ExpanderGraph gabber_galil_power(std::size_t logical, int power);
    static ExpanderGraph complete(std::size_t logical);
    static ExpanderGraph from_edges(std::size_t vertices, std::size_t degree,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    Kind kind() const { return kind_; }
    std::size_t logical_vertices() const { return logical_; }
    std::size_t padded_vertices() const { return padded_; }
    std::size_t degree() const { return degree_; }
    int power() const { return power_; }
    double lambda_bound() const { return lambda_bound_; }
    std::size_t edge_count() const;

    bool is_dummy(std::size_t vertex) const { return vertex >= logical_; }

    /// Enumerates all directed edges in a fixed deterministic order.
    void for_each_edge(const std::function<void(std::uint32_t, std::uint32_t)>& fn) const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

private:
    ExpanderGraph() = default;

    Kind kind_ = Kind::complete;
    std::size_t logical_ = 0;
    std::size_t padded_ = 0;
    std::size_t degree_ = 0;
    std::size_t side_ = 0; // grid side for gabber-galil
    int power_ = 1;
    double lambda_bound_ = 1.0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> explicit_edges_;

    friend ExpanderGraph build_expander(std::size_t, const Rational&, const ExpanderOptions&);
};

/// Certified expander on `vertex_count` vertices with second eigenvalue at
/// most lambda_target: powered Gabber-Galil when its degree stays below the
/// vertex count, otherwise the complete digraph (exact lambda 1/(n-1)).
ExpanderGraph build_expander(std::size_t vertex_count, const Rational& lambda_target,
                             const ExpanderOptions& options = {});

/// Second-largest eigenvalue magnitude of the normalized adjacency matrix,
/// via power iteration with the all-ones eigenvector deflated, to absolute
/// tolerance 1e-6. Guarded by the certification budget.
double second_eigenvalue(const ExpanderGraph& graph, std::size_t budget = 4096);

} // namespace frs
