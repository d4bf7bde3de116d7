#include "frs/expander.hpp"

#include <cmath>
#include <numeric>

#include "frs/errors.hpp"
#include "frs/rng.hpp"

namespace frs {

namespace {

// 5*sqrt(2)/8, the classical bound for the degree-8 grid construction
constexpr double kBaseLambda = 0.8838834764831844;

// Affine neighbor maps on Z_side x Z_side; the set is closed under
// inverses, so the multigraph is symmetric.
std::uint32_t gg_neighbor(std::uint32_t v, int map, std::size_t side) {
    const std::uint64_t s = side;
    std::uint64_t x = v / side, y = v % side;
    switch (map) {
        case 0: x = (x + 2 * y) % s; break;
        case 1: x = (x + s * 2 - 2 * y) % s; break;
        case 2: x = (x + 2 * y + 1) % s; break;
        case 3: x = (x + s * 2 - 2 * y - 1 + s) % s; break;
        case 4: y = (y + 2 * x) % s; break;
        case 5: y = (y + s * 2 - 2 * x) % s; break;
        case 6: y = (y + 2 * x + 1) % s; break;
        case 7: y = (y + s * 2 - 2 * x - 1 + s) % s; break;
    }
    return static_cast<std::uint32_t>(x * s + y);
}

std::size_t isqrt_ceil(std::size_t n) {
    std::size_t r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

} // namespace

ExpanderGraph ExpanderGraph::gabber_galil_power(std::size_t logical, int power) {
    ExpanderGraph g;
    g.kind_ = Kind::gabber_galil_power;
    g.logical_ = logical;
    g.side_ = std::max<std::size_t>(2, isqrt_ceil(logical));
    g.padded_ = g.side_ * g.side_;
    g.power_ = power;
    g.degree_ = 1;
    for (int i = 0; i < power; ++i) g.degree_ *= 8;
    g.lambda_bound_ = std::pow(kBaseLambda, power);
    return g;
}

ExpanderGraph ExpanderGraph::complete(std::size_t logical) {
    ExpanderGraph g;
    g.kind_ = Kind::complete;
    g.logical_ = logical;
    g.padded_ = logical;
    g.degree_ = logical > 0 ? logical - 1 : 0;
    g.lambda_bound_ = logical > 1 ? 1.0 / static_cast<double>(logical - 1) : 0.0;
    return g;
}

ExpanderGraph ExpanderGraph::from_edges(std::size_t vertices, std::size_t degree,
                                        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    ExpanderGraph g;
    g.kind_ = Kind::explicit_edges;
    g.logical_ = vertices;
    g.padded_ = vertices;
    g.degree_ = degree;
    g.explicit_edges_ = std::move(edges);
    return g;
}

std::size_t ExpanderGraph::edge_count() const {
    if (kind_ == Kind::complete) return logical_ > 0 ? logical_ * (logical_ - 1) : 0;
    if (kind_ == Kind::explicit_edges || kind_ == Kind::random_regular)
        return explicit_edges_.size();
    return padded_ * degree_;
}

void ExpanderGraph::for_each_edge(
    const std::function<void(std::uint32_t, std::uint32_t)>& fn) const {
    switch (kind_) {
        case Kind::complete:
            for (std::uint32_t u = 0; u < logical_; ++u)
                for (std::uint32_t v = 0; v < logical_; ++v)
                    if (u != v) fn(u, v);
            break;
        case Kind::gabber_galil_power:
            for (std::uint32_t u = 0; u < padded_; ++u) {
                // walks of length `power`, enumerated odometer-style
                std::vector<int> word(static_cast<std::size_t>(power_), 0);
                while (true) {
                    std::uint32_t v = u;
                    for (int step : word) v = gg_neighbor(v, step, side_);
                    fn(u, v);
                    std::size_t pos = 0;
                    while (pos < word.size() && ++word[pos] == 8) {
                        word[pos] = 0;
                        ++pos;
                    }
                    if (pos == word.size()) break;
                }
            }
            break;
        case Kind::random_regular:
        case Kind::explicit_edges:
            for (const auto& e : explicit_edges_) fn(e.first, e.second);
            break;
    }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ExpanderGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count());
    for_each_edge([&](std::uint32_t u, std::uint32_t v) { out.emplace_back(u, v); });
    return out;
}

ExpanderGraph build_expander(std::size_t vertex_count, const Rational& lambda_target,
                             const ExpanderOptions& options) {
    if (lambda_target <= Rational(0) || lambda_target >= Rational(1))
        fail(ErrorKind::BadParams, "lambda target must lie in (0, 1)");
    if (vertex_count <= 1) return ExpanderGraph::complete(vertex_count);

    const double target = lambda_target.to_double();
    int power = 1;
    double bound = kBaseLambda;
    __uint128_t degree = 8;
    while (bound > target && degree < vertex_count) {
        ++power;
        bound *= kBaseLambda;
        degree *= 8;
    }

    if (bound <= target && degree < vertex_count) {
        auto g = ExpanderGraph::gabber_galil_power(vertex_count, power);
        if (g.padded_vertices() <= options.certification_budget) {
            const double measured = second_eigenvalue(g, options.certification_budget);
            if (measured > target) return ExpanderGraph::complete(vertex_count);
        }
        return g;
    }

    if (options.allow_random_regular) {
        const double d_needed = 16.0 / (target * target);
        std::size_t d = static_cast<std::size_t>(std::ceil(d_needed));
        if (d % 2) ++d;
        if (d < vertex_count && vertex_count <= options.certification_budget) {
            // union of d/2 seeded permutations and their inverses; retry the
            // seed until the measured eigenvalue certifies, then it is frozen
            for (std::uint64_t salt = 0; salt < 64; ++salt) {
                Rng rng(mix_seed(options.seed, {0x7267756c61ULL, salt}));
                std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
                edges.reserve(vertex_count * d);
                std::vector<std::uint32_t> perm(vertex_count);
                for (std::size_t p = 0; p < d / 2; ++p) {
                    std::iota(perm.begin(), perm.end(), 0);
                    for (std::size_t i = vertex_count - 1; i > 0; --i) {
                        std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
                        std::swap(perm[i], perm[j]);
                    }
                    for (std::uint32_t u = 0; u < vertex_count; ++u) {
                        edges.emplace_back(u, perm[u]);
                        edges.emplace_back(perm[u], u);
                    }
                }
                auto g = ExpanderGraph::from_edges(vertex_count, d, std::move(edges));
                g.kind_ = ExpanderGraph::Kind::random_regular;
                g.lambda_bound_ = target;
                if (second_eigenvalue(g, options.certification_budget) <= target) return g;
            }
        }
    }

    return ExpanderGraph::complete(vertex_count);
}

double second_eigenvalue(const ExpanderGraph& graph, std::size_t budget) {
    const std::size_t n = graph.padded_vertices();
    if (n > budget)
        fail(ErrorKind::BudgetExceeded, "graph exceeds the certification budget");
    if (n <= 1) return 0.0;
    if (graph.degree() == 0) return 0.0;

    const auto edge_list = graph.edges();
    const double inv_degree = 1.0 / static_cast<double>(graph.degree());

    std::vector<double> x(n), y(n);
    Rng rng(0x5eca11edULL);
    for (auto& v : x) v = static_cast<double>(rng.next() >> 11) / 9007199254740992.0 - 0.5;

    auto deflate = [&](std::vector<double>& vec) {
        double mean = 0;
        for (double v : vec) mean += v;
        mean /= static_cast<double>(n);
        for (double& v : vec) v -= mean;
    };
    auto norm = [](const std::vector<double>& vec) {
        double s = 0;
        for (double v : vec) s += v * v;
        return std::sqrt(s);
    };

    deflate(x);
    double nx = norm(x);
    if (nx == 0) return 0.0;
    for (double& v : x) v /= nx;

    double estimate = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
        std::fill(y.begin(), y.end(), 0.0);
        for (const auto& e : edge_list) y[e.second] += x[e.first];
        for (double& v : y) v *= inv_degree;
        deflate(y);
        const double ny = norm(y);
        if (ny < 1e-300) return 0.0;
        const double prev = estimate;
        estimate = ny;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
        if (iter > 4 && std::abs(estimate - prev) < 1e-9) break;
    }
    return estimate;
}

} // namespace frs
