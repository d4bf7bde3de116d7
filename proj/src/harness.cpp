#include "frs/harness.hpp"

#include <chrono>
#include <sstream>

#include "frs/rng.hpp"

#include <json.hpp>

namespace frs {

Algo parse_algo(const std::string& name) {
    if (name == "det") return Algo::det;
    if (name == "rand") return Algo::rand;
    if (name == "krsw") return Algo::krsw;
    if (name == "brute") return Algo::brute;
    fail(ErrorKind::ConfigError, "unknown algorithm '" + name + "'");
}

const char* algo_name(Algo algo) {
    switch (algo) {
        case Algo::det: return "det";
        case Algo::rand: return "rand";
        case Algo::krsw: return "krsw";
        case Algo::brute: return "brute";
    }
    return "?";
}

std::set<FoldedWord> brute_force_list(const FrsParams& params, const FoldedWord& g,
                                      const Rational& radius, std::uint64_t budget) {
    __uint128_t total = 1;
    for (std::size_t i = 0; i < params.rn; ++i) {
        total *= params.q;
        if (total > budget)
            fail(ErrorKind::BudgetExceeded, "brute force needs q^rn > budget " +
                                                std::to_string(budget));
    }
    std::set<FoldedWord> list;
    std::vector<std::uint64_t> coeffs(params.rn, 0);
    while (true) {
        FoldedWord candidate = encode(params, Poly(params.q, coeffs));
        if (folded_distance(candidate, g) < radius) list.insert(std::move(candidate));
        std::size_t pos = 0;
        while (pos < params.rn && ++coeffs[pos] == params.q) {
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == params.rn) break;
    }
    return list;
}

std::size_t max_errors_below(const Rational& radius, std::size_t block_len) {
    if (radius <= Rational(0)) return 0;
    const __int128 scaled = static_cast<__int128>(radius.num()) * block_len;
    __int128 e = (scaled - 1) / radius.den(); // largest e with e < radius * N
    if (e < 0) e = 0;
    if (e > static_cast<__int128>(block_len)) e = block_len;
    return static_cast<std::size_t>(e);
}

namespace {

std::vector<std::string> canonical_lines(const std::set<FoldedWord>& words) {
    std::vector<std::string> lines;
    lines.reserve(words.size());
    for (const auto& w : words) lines.push_back(w.canonical());
    return lines;
}

void verify_outputs(const FrsParams& params, const FoldedWord& g, const Rational& radius,
                    const std::set<FoldedWord>& words) {
    for (const auto& w : words) {
        if (!decode_message(params, w))
            fail(ErrorKind::BadParams, "decoder emitted a word outside the code");
        if (!(folded_distance(w, g) < radius))
            fail(ErrorKind::BadParams, "decoder emitted a word outside the claimed radius");
    }
}

} // namespace

DecodeReport decode_end_to_end(const FrsParams& params, const FoldedWord& g, Algo algo,
                               const DecodeOptions& options) {
    DecodeReport report;
    report.params = params;
    report.algo = algo_name(algo);
    report.seed = options.seed;
    report.beta = options.beta;

    const Rational delta = Rational(1) - params.rate();
    Rational radius;
    Rational eps{0};
    int s = options.s.value_or(0);
    if (algo == Algo::rand || !options.eps) {
        if (s < 1) fail(ErrorKind::BadParams, "this decode mode requires s");
        radius = decoding_radius(static_cast<std::size_t>(s), params.m, params.rate());
        eps = delta - radius;
    } else {
        eps = *options.eps;
        if (eps <= Rational(0) || eps >= delta)
            fail(ErrorKind::BadEpsilon, "eps must lie strictly between 0 and delta");
        radius = delta - eps;
    }
    report.s = s;
    report.eps = eps;
    report.radius = radius;

    // the container must be guaranteed to hold the target list
    if (!options.use_harness_container && algo != Algo::brute) {
        if (s < 1) fail(ErrorKind::BadParams, "interpolated containers require s");
        const Rational container_radius =
            decoding_radius(static_cast<std::size_t>(s), params.m, params.rate());
        if (radius > container_radius)
            fail(ErrorKind::BadParams,
                 "requested radius exceeds the container guarantee for s=" + std::to_string(s));
    }

    if (options.count_field_ops) {
        FieldOpCounter::enabled = true;
        FieldOpCounter::reset();
    }
    const auto start = std::chrono::steady_clock::now();

    std::set<FoldedWord> output;
    AffineSubspace container = AffineSubspace::empty(params);
    bool have_container = false;
    if (algo != Algo::brute) {
        container = options.use_harness_container
                        ? harness_container(params, options.harness_list, options.harness_dim,
                                            mix_seed(options.seed, {0xc0a7a19e5ULL}))
                        : find_container(params, g, static_cast<std::size_t>(s));
        have_container = true;
        report.container_dim = container.dim();
    }

    switch (algo) {
        case Algo::brute:
            output = brute_force_list(params, g, radius);
            report.trials = 1;
            break;
        case Algo::det:
            output = det_prune(g, eps, container, delta, options.det_config);
            report.trials = 1;
            break;
        case Algo::rand: {
            output = rand_decode(g, container, s, options.beta, options.seed);
            report.trials = rand_decode_trials(s, options.beta);
            if (!container.is_empty())
                report.profile_sizes = dimension_profile(g, container, s).sizes();
            break;
        }
        case Algo::krsw: {
            report.trials = options.krsw_trials;
            std::uint64_t hits = 0;
            for (std::uint64_t t = 0; t < options.krsw_trials; ++t) {
                if (auto found = krsw_prune(g, container, eps, delta, mix_seed(options.seed, {t}))) {
                    output.insert(std::move(*found));
                    ++hits;
                }
            }
            report.success_frequency =
                options.krsw_trials ? static_cast<double>(hits) / options.krsw_trials : 0.0;
            break;
        }
    }

    const auto stop = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (options.count_field_ops) {
        report.field_ops = FieldOpCounter::count;
        FieldOpCounter::enabled = false;
    }

    verify_outputs(params, g, radius, output);
    report.outputs_verified = true;
    report.output = canonical_lines(output);

    if (options.oracle != OracleMode::none) {
        std::set<FoldedWord> truth;
        if (options.oracle == OracleMode::code || !have_container) {
            truth = brute_force_list(params, g, radius);
        } else {
            for (const auto& w : container.enumerate())
                if (folded_distance(w, g) < radius) truth.insert(w);
        }
        report.oracle = canonical_lines(truth);
        report.agreement = (output == truth);
    }
    return report;
}

std::string DecodeReport::to_json(bool emit_timings) const {
    nlohmann::ordered_json j;
    j["q"] = params.q;
    j["n"] = params.n;
    j["m"] = params.m;
    j["N"] = params.block_len;
    j["rn"] = params.rn;
    j["algo"] = algo;
    j["s"] = s;
    j["eps"] = eps.str();
    j["beta"] = beta.str();
    j["radius"] = radius.str();
    j["seed"] = seed;
    j["container_dim"] = container_dim;
    j["output"] = output;
    if (oracle) j["oracle"] = *oracle;
    if (agreement) j["agreement"] = *agreement;
    j["trials"] = trials;
    if (success_frequency) j["success_frequency"] = *success_frequency;
    if (field_ops) j["field_ops"] = *field_ops;
    if (profile_sizes) j["profile_sizes"] = *profile_sizes;
    j["outputs_verified"] = outputs_verified;
    if (emit_timings) j["wall_ms"] = wall_ms;
    return j.dump();
}

} // namespace frs
