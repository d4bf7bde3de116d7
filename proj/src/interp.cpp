#include "frs/interp.hpp"

#include "frs/rng.hpp"

namespace frs {

namespace {

std::vector<std::uint64_t> padded_coeffs(const Poly& p, std::size_t len) {
    std::vector<std::uint64_t> out(len, 0);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
    return out;
}

AffineSubspace container_from_solution(const FrsParams& params, const AffineSolution& sol) {
    auto frame = std::make_shared<SubspaceFrame>();
    frame->params = params;
    frame->base = encode(params, Poly(params.q, sol.particular));
    for (const auto& vec : sol.kernel)
        frame->directions.push_back(encode(params, Poly(params.q, vec)));
    return AffineSubspace::whole(std::move(frame));
}

} // namespace

std::size_t interpolation_degree_budget(const FrsParams& params, std::size_t s) {
    const std::int64_t constraints =
        static_cast<std::int64_t>(params.block_len) * static_cast<std::int64_t>(params.m - s + 1);
    const std::int64_t slack = constraints - static_cast<std::int64_t>(s + params.rn);
    if (slack < 0) return 0;
    return static_cast<std::size_t>(slack / static_cast<std::int64_t>(s + 1) + 1);
}

AffineSubspace find_container(const FrsParams& params, const FoldedWord& g, std::size_t s) {
    if (s < 1 || s > params.m) fail(ErrorKind::BadParams, "order s must lie in [1, m]");
    Gf field(params.q);
    const std::size_t window_rows = params.m - s + 1;
    const std::size_t constraints = params.block_len * window_rows;
    const std::size_t degree_budget = interpolation_degree_budget(params, s);
    const std::size_t a0_len = degree_budget + params.rn;          // deg A_0 <= D + rn - 1
    const std::size_t ai_len = degree_budget + 1;                  // deg A_i <= D

    // every codeword within the radius satisfies the interpolation identity
    // only if its agreement windows outnumber the identity's degree
    const Rational radius = decoding_radius(s, params.m, params.rate());
    const Rational lhs = (Rational(1) - radius) *
                         Rational(static_cast<std::int64_t>(constraints));
    if (!(lhs > Rational(static_cast<std::int64_t>(a0_len) - 1)))
        fail(ErrorKind::ParamsInfeasible,
             "vanishing inequality fails for s=" + std::to_string(s));

    // homogeneous vanishing system (last column stays zero); its kernel
    // vectors are the candidate interpolation polynomials
    const std::size_t unknowns = a0_len + s * ai_len;
    FqMatrix vanishing(constraints, unknowns + 1, params.q);
    std::size_t row = 0;
    for (std::size_t i = 0; i < params.block_len; ++i) {
        for (std::size_t j = 0; j + s <= params.m; ++j, ++row) {
            const std::uint64_t x = field.pow(params.gamma, i * params.m + j);
            std::uint64_t xe = 1;
            for (std::size_t e = 0; e < a0_len; ++e) {
                vanishing.at(row, e) = xe;
                xe = field.mul(xe, x);
            }
            for (std::size_t t = 1; t <= s; ++t) {
                const std::uint64_t y = g.at(i, j + t - 1);
                std::uint64_t xd = 1;
                for (std::size_t d = 0; d < ai_len; ++d) {
                    vanishing.at(row, a0_len + (t - 1) * ai_len + d) = field.mul(xd, y);
                    xd = field.mul(xd, x);
                }
            }
        }
    }
    auto q_solutions = solve_affine(std::move(vanishing));
    if (!q_solutions || q_solutions->kernel.empty())
        fail(ErrorKind::DegenerateSystem, "no nonzero interpolation polynomial");

    for (const auto& qvec : q_solutions->kernel) {
        // identity A_0(X) + sum_t A_t(X) f(gamma^{t-1} X) = 0, linear in the
        // rn coefficients of f, one row per coefficient of X^e
        FqMatrix identity(a0_len, params.rn + 1, params.q);
        for (std::size_t e = 0; e < a0_len; ++e) {
            for (std::size_t c = 0; c < params.rn && c <= e; ++c) {
                std::uint64_t acc = 0;
                for (std::size_t t = 1; t <= s; ++t) {
                    const std::size_t d = e - c;
                    if (d >= ai_len) continue;
                    const std::uint64_t coeff = qvec[a0_len + (t - 1) * ai_len + d];
                    if (coeff == 0) continue;
                    const std::uint64_t shift = field.pow(params.gamma, (t - 1) * c % (params.q - 1));
                    acc = field.add(acc, field.mul(coeff, shift));
                }
                identity.at(e, c) = acc;
            }
            identity.at(e, params.rn) = field.neg(qvec[e]);
        }
        auto f_solutions = solve_affine(std::move(identity));
        if (!f_solutions) return AffineSubspace::empty(params); // no codeword satisfies it
        if (f_solutions->kernel.size() <= s - 1)
            return container_from_solution(params, *f_solutions);
        // degenerate interpolation polynomial; try the next kernel vector
    }
    fail(ErrorKind::DegenerateSystem,
         "every interpolation polynomial yields a container of dimension above s-1");
}

AffineSubspace harness_container(const FrsParams& params, const std::set<FoldedWord>& list,
                                 std::size_t k, std::uint64_t seed) {
    if (k > params.rn)
        fail(ErrorKind::BadParams, "container dimension cannot exceed the code dimension");
    Gf field(params.q);

    std::vector<std::vector<std::uint64_t>> messages;
    for (const auto& word : list) {
        auto msg = decode_message(params, word);
        if (!msg) fail(ErrorKind::BadParams, "list element is not a codeword");
        messages.push_back(padded_coeffs(*msg, params.rn));
    }

    Rng rng(seed);
    std::vector<std::uint64_t> base;
    if (messages.empty()) {
        base.resize(params.rn);
        for (auto& v : base) v = rng.below(params.q);
    } else {
        base = messages.front();
    }

    FqMatrix span(0, params.rn, params.q);
    std::vector<std::vector<std::uint64_t>> directions;
    auto try_add = [&](const std::vector<std::uint64_t>& candidate) {
        FqMatrix probe = span;
        probe.append_row(candidate);
        if (rank_of(probe) > directions.size()) {
            span.append_row(candidate);
            directions.push_back(candidate);
            return true;
        }
        return false;
    };

    for (std::size_t i = 1; i < messages.size(); ++i) {
        std::vector<std::uint64_t> diff(params.rn);
        for (std::size_t c = 0; c < params.rn; ++c)
            diff[c] = field.sub(messages[i][c], base[c]);
        try_add(diff);
    }
    if (directions.size() > k)
        fail(ErrorKind::DimensionTooSmall, "the affine span of the list has dimension " +
                                               std::to_string(directions.size()) +
                                               ", above k=" + std::to_string(k));

    while (directions.size() < k) {
        std::vector<std::uint64_t> candidate(params.rn);
        for (auto& v : candidate) v = rng.below(params.q);
        try_add(candidate);
    }

    auto frame = std::make_shared<SubspaceFrame>();
    frame->params = params;
    frame->base = encode(params, Poly(params.q, base));
    for (const auto& dir : directions)
        frame->directions.push_back(encode(params, Poly(params.q, dir)));
    return AffineSubspace::whole(std::move(frame));
}

} // namespace frs
