#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "frs/harness.hpp"
#include "frs/rng.hpp"

#include <json.hpp>

namespace frs {

namespace {

using nlohmann::ordered_json;

struct ConfigEntry {
    std::string value;
    int line = 0;
};

struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, ConfigEntry> entries;

    bool has(const std::string& key) const { return entries.count(key) != 0; }

    const ConfigEntry& entry(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end())
            fail(ErrorKind::ConfigError, "section [" + name + "] (line " + std::to_string(line) +
                                             ") is missing key '" + key + "'");
        return it->second;
    }

    std::string str(const std::string& key) const { return entry(key).value; }
    std::string str_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? entry(key).value : fallback;
    }

    std::int64_t integer(const std::string& key) const {
        const auto& e = entry(key);
        try {
            return std::stoll(e.value);
        } catch (const std::exception&) {
            fail(ErrorKind::ConfigError, "line " + std::to_string(e.line) + ": key '" + key +
                                             "' is not an integer: '" + e.value + "'");
        }
    }
    std::int64_t integer_or(const std::string& key, std::int64_t fallback) const {
        return has(key) ? integer(key) : fallback;
    }

    Rational rational(const std::string& key) const {
        const auto& e = entry(key);
        try {
            return Rational::parse(e.value);
        } catch (const std::exception&) {
            fail(ErrorKind::ConfigError, "line " + std::to_string(e.line) + ": key '" + key +
                                             "' is not a rational: '" + e.value + "'");
        }
    }

    std::vector<std::int64_t> integer_list(const std::string& key) const {
        const auto& e = entry(key);
        std::vector<std::int64_t> out;
        std::stringstream ss(e.value);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                out.push_back(std::stoll(part));
            } catch (const std::exception&) {
                fail(ErrorKind::ConfigError, "line " + std::to_string(e.line) + ": key '" + key +
                                                 "' has a non-integer element: '" + part + "'");
            }
        }
        if (out.empty())
            fail(ErrorKind::ConfigError,
                 "line " + std::to_string(e.line) + ": key '" + key + "' is empty");
        return out;
    }
    std::vector<std::int64_t> integer_list_or(const std::string& key, std::int64_t fallback) const {
        if (!has(key)) return {fallback};
        return integer_list(key);
    }
};

struct Config {
    Section globals; // keys before the first section header
    std::vector<Section> sections;
};

Config parse_config(std::istream& in) {
    Config config;
    config.globals.name = "<globals>";
    Section* current = &config.globals;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(ErrorKind::ConfigError,
                     "line " + std::to_string(line_no) + ": unterminated section header");
            Section section;
            section.name = line.substr(1, line.size() - 2);
            section.line = line_no;
            if (section.name.empty())
                fail(ErrorKind::ConfigError,
                     "line " + std::to_string(line_no) + ": empty section name");
            config.sections.push_back(std::move(section));
            current = &config.sections.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::ConfigError,
                 "line " + std::to_string(line_no) + ": expected 'key = value', got '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        trim(key);
        trim(value);
        if (key.empty() || value.empty())
            fail(ErrorKind::ConfigError,
                 "line " + std::to_string(line_no) + ": empty key or value");
        current->entries[key] = ConfigEntry{value, line_no};
    }
    return config;
}

struct GridCell {
    std::uint64_t q;
    std::size_t n, m, rn;
    int s;
};

std::vector<GridCell> build_grid(const Section& section) {
    std::vector<GridCell> cells;
    for (auto q : section.integer_list("q"))
        for (auto n : section.integer_list("n"))
            for (auto m : section.integer_list("m"))
                for (auto rn : section.integer_list("rn"))
                    for (auto s : section.integer_list_or("s", 1))
                        cells.push_back(GridCell{static_cast<std::uint64_t>(q),
                                                 static_cast<std::size_t>(n),
                                                 static_cast<std::size_t>(m),
                                                 static_cast<std::size_t>(rn),
                                                 static_cast<int>(s)});
    return cells;
}

ordered_json cell_json(const GridCell& cell) {
    ordered_json j;
    j["q"] = cell.q;
    j["n"] = cell.n;
    j["m"] = cell.m;
    j["rn"] = cell.rn;
    j["s"] = cell.s;
    return j;
}

struct Instance {
    FoldedWord received;
    std::set<FoldedWord> transmitted; // codewords woven into the received word
    std::size_t errors = 0;
};

Poly random_message(const FrsParams& params, Rng& rng) {
    std::vector<std::uint64_t> coeffs(params.rn);
    for (auto& c : coeffs) c = rng.below(params.q);
    return Poly(params.q, coeffs);
}

/// A received word built from one transmitted codeword, optionally with a
/// second codeword overlaid on part of the block, then symbol corruptions.
Instance make_instance(const FrsParams& params, const Rational& radius, const std::string& errors_token,
                       int extras, std::uint64_t seed) {
    Rng rng(mix_seed(seed, {0x1257a7ceULL}));
    Instance inst;
    FoldedWord c0 = encode(params, random_message(params, rng));
    inst.transmitted.insert(c0);
    FoldedWord g = c0;
    if (extras > 0) {
        FoldedWord c1 = encode(params, random_message(params, rng));
        inst.transmitted.insert(c1);
        // overlay 2/5 of the symbols so both codewords sit near g
        const std::size_t overlay = params.block_len * 2 / 5;
        std::vector<std::size_t> idx(params.block_len);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (std::size_t i = 0; i < overlay; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
            std::swap(idx[i], idx[j]);
        }
        for (std::size_t i = 0; i < overlay; ++i)
            for (std::size_t row = 0; row < params.m; ++row)
                g.at(idx[i], row) = c1.at(idx[i], row);
    }
    inst.errors = errors_token == "radius"
                      ? max_errors_below(radius, params.block_len)
                      : static_cast<std::size_t>(std::stoll(errors_token));
    if (extras > 0 && errors_token == "radius") inst.errors /= 2; // leave room for the overlay
    inst.received = corrupt(g, inst.errors, mix_seed(seed, {0xc0441ULL}));
    return inst;
}

struct Aggregator {
    std::map<std::string, std::map<std::string, std::string>> rows; // section -> metric -> value

    void put(const std::string& section, const std::string& metric, const std::string& value) {
        rows[section][metric] = value;
    }
    void put(const std::string& section, const std::string& metric, double value) {
        std::ostringstream out;
        out << value;
        rows[section][metric] = out.str();
    }
    void put(const std::string& section, const std::string& metric, std::uint64_t value) {
        rows[section][metric] = std::to_string(value);
    }
};

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void run_decode_section(const Section& section, std::size_t section_idx, std::uint64_t master_seed,
                        bool emit_timings, std::ostream& out, Aggregator& agg) {
    const Algo algo = parse_algo(section.str("algo"));
    const auto cells = build_grid(section);
    const auto instances = static_cast<std::size_t>(section.integer_or("instances", 1));
    const std::string errors_token = section.str_or("errors", "radius");
    const std::string container = section.str_or("container", "interp");
    const int extras = static_cast<int>(section.integer_or("extras", 0));
    const std::string oracle_token = section.str_or("oracle", "none");

    std::uint64_t runs = 0, agreements = 0, with_oracle = 0;
    std::uint64_t total_list = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        const FrsParams params = FrsParams::make(cell.q, cell.n, cell.m, cell.rn);
        for (std::size_t inst_idx = 0; inst_idx < instances; ++inst_idx) {
            const std::uint64_t seed = mix_seed(master_seed, {section_idx, ci, inst_idx});
            DecodeOptions opts;
            opts.s = cell.s;
            if (section.has("eps")) opts.eps = section.rational("eps");
            if (section.has("beta")) opts.beta = section.rational("beta");
            opts.seed = seed;
            opts.krsw_trials = static_cast<std::uint64_t>(section.integer_or("trials", 1000));
            opts.count_field_ops = section.str_or("count_ops", "false") == "true";
            if (oracle_token == "code") opts.oracle = OracleMode::code;
            else if (oracle_token == "container") opts.oracle = OracleMode::container;
            else if (oracle_token != "none")
                fail(ErrorKind::ConfigError, "unknown oracle mode '" + oracle_token + "'");

            const Rational delta = Rational(1) - params.rate();
            const Rational radius =
                (algo == Algo::rand || !opts.eps)
                    ? decoding_radius(static_cast<std::size_t>(cell.s), params.m, params.rate())
                    : delta - *opts.eps;
            Instance inst = make_instance(params, radius, errors_token, extras, seed);
            if (container == "harness") {
                opts.use_harness_container = true;
                opts.harness_list = inst.transmitted;
                opts.harness_dim = static_cast<std::size_t>(section.integer_or("k", 1));
            } else if (container != "interp") {
                fail(ErrorKind::ConfigError, "unknown container mode '" + container + "'");
            }

            DecodeReport report = decode_end_to_end(params, inst.received, algo, opts);
            ++runs;
            total_list += report.output.size();
            if (report.agreement) {
                ++with_oracle;
                if (*report.agreement) ++agreements;
            }
            ordered_json record;
            record["section"] = section.name;
            record["suite"] = "decode";
            record["cell"] = cell_json(cell);
            record["instance"] = inst_idx;
            record["errors"] = inst.errors;
            record["report"] = ordered_json::parse(report.to_json(emit_timings));
            out << record.dump() << '\n';
        }
    }
    agg.put(section.name, "runs", runs);
    agg.put(section.name, "mean_list_size",
            runs ? static_cast<double>(total_list) / static_cast<double>(runs) : 0.0);
    if (with_oracle) {
        agg.put(section.name, "oracle_runs", with_oracle);
        agg.put(section.name, "agreements", agreements);
        agg.put(section.name, "agreement_rate",
                static_cast<double>(agreements) / static_cast<double>(with_oracle));
    }
}

void run_success_section(const Section& section, std::size_t section_idx,
                         std::uint64_t master_seed, std::ostream& out, Aggregator& agg) {
    const auto cells = build_grid(section);
    const auto instances = static_cast<std::size_t>(section.integer_or("instances", 1));
    const auto trials = static_cast<std::uint64_t>(section.integer_or("trials", 1000));
    const auto k = static_cast<std::size_t>(section.integer_or("k", 1));
    const std::string errors_token = section.str_or("errors", "radius");

    double min_freq = 1.0;
    double bound = 0.0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        const FrsParams params = FrsParams::make(cell.q, cell.n, cell.m, cell.rn);
        const Rational radius =
            decoding_radius(static_cast<std::size_t>(cell.s), params.m, params.rate());
        for (std::size_t inst_idx = 0; inst_idx < instances; ++inst_idx) {
            const std::uint64_t seed = mix_seed(master_seed, {section_idx, ci, inst_idx});
            Instance inst = make_instance(params, radius, errors_token, 0, seed);
            const FoldedWord& target = *inst.transmitted.begin();
            AffineSubspace container =
                harness_container(params, inst.transmitted, k, mix_seed(seed, {0x117ULL}));
            std::uint64_t hits = 0;
            for (std::uint64_t t = 0; t < trials; ++t) {
                auto found =
                    rand_prune_once(inst.received, container, cell.s, mix_seed(seed, {7, t}));
                if (found && *found == target) ++hits;
            }
            const double freq = trials ? static_cast<double>(hits) / trials : 0.0;
            bound = 1.0 / (static_cast<double>(cell.s) * static_cast<double>(container.dim()) + 1.0);
            min_freq = std::min(min_freq, freq);

            ordered_json record;
            record["section"] = section.name;
            record["suite"] = "success";
            record["cell"] = cell_json(cell);
            record["instance"] = inst_idx;
            record["k"] = container.dim();
            record["errors"] = inst.errors;
            record["trials"] = trials;
            record["hits"] = hits;
            record["empirical_frequency"] = freq;
            record["theory_lower_bound"] = bound;
            out << record.dump() << '\n';
        }
    }
    agg.put(section.name, "min_frequency", min_freq);
    agg.put(section.name, "theory_lower_bound", bound);
}

void run_listsize_section(const Section& section, std::size_t section_idx,
                          std::uint64_t master_seed, std::ostream& out, Aggregator& agg) {
    const auto cells = build_grid(section);
    const auto instances = static_cast<std::size_t>(section.integer_or("instances", 1));
    const std::string errors_token = section.str_or("errors", "radius");

    std::uint64_t runs = 0, violations = 0, max_size = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        const FrsParams params = FrsParams::make(cell.q, cell.n, cell.m, cell.rn);
        const Rational radius =
            decoding_radius(static_cast<std::size_t>(cell.s), params.m, params.rate());
        for (std::size_t inst_idx = 0; inst_idx < instances; ++inst_idx) {
            const std::uint64_t seed = mix_seed(master_seed, {section_idx, ci, inst_idx});
            Instance inst = make_instance(params, radius, errors_token, 0, seed);
            const auto list = brute_force_list(params, inst.received, radius);
            ++runs;
            max_size = std::max<std::uint64_t>(max_size, list.size());
            const bool ok = list.size() <= static_cast<std::size_t>(cell.s);
            if (!ok) ++violations;
            ordered_json record;
            record["section"] = section.name;
            record["suite"] = "listsize";
            record["cell"] = cell_json(cell);
            record["instance"] = inst_idx;
            record["errors"] = inst.errors;
            record["list_size"] = list.size();
            record["bound"] = cell.s;
            record["within_bound"] = ok;
            out << record.dump() << '\n';
        }
    }
    agg.put(section.name, "runs", runs);
    agg.put(section.name, "max_list_size", max_size);
    agg.put(section.name, "violations", violations);
}

void run_profile_section(const Section& section, std::size_t section_idx,
                         std::uint64_t master_seed, std::ostream& out, Aggregator& agg) {
    const auto cells = build_grid(section);
    const auto instances = static_cast<std::size_t>(section.integer_or("instances", 1));
    const auto k = static_cast<std::size_t>(section.integer_or("k", 1));
    const std::string errors_token = section.str_or("errors", "radius");

    std::uint64_t runs = 0, violations = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        const FrsParams params = FrsParams::make(cell.q, cell.n, cell.m, cell.rn);
        const Rational radius =
            decoding_radius(static_cast<std::size_t>(cell.s), params.m, params.rate());
        for (std::size_t inst_idx = 0; inst_idx < instances; ++inst_idx) {
            const std::uint64_t seed = mix_seed(master_seed, {section_idx, ci, inst_idx});
            Instance inst = make_instance(params, radius, errors_token, 0, seed);
            AffineSubspace container =
                harness_container(params, inst.transmitted, k, mix_seed(seed, {0x117ULL}));
            const auto profile = dimension_profile(inst.received, container, cell.s);
            // mass * (m-k+1) * n <= k * m * rn * N, all integers
            const auto dim = static_cast<std::uint64_t>(container.dim());
            const __uint128_t lhs = static_cast<__uint128_t>(profile.dimension_mass()) *
                                    (params.m - dim + 1) * params.n;
            const __uint128_t rhs = static_cast<__uint128_t>(dim) * params.m * params.rn *
                                    params.block_len;
            const bool ok = lhs <= rhs;
            ++runs;
            if (!ok) ++violations;
            ordered_json record;
            record["section"] = section.name;
            record["suite"] = "profile";
            record["cell"] = cell_json(cell);
            record["instance"] = inst_idx;
            record["k"] = container.dim();
            record["sizes"] = profile.sizes();
            record["dimension_mass"] = profile.dimension_mass();
            record["within_bound"] = ok;
            out << record.dump() << '\n';
        }
    }
    agg.put(section.name, "runs", runs);
    agg.put(section.name, "violations", violations);
}

void run_scaling_section(const Section& section, std::size_t section_idx,
                         std::uint64_t master_seed, bool emit_timings, std::ostream& out,
                         Aggregator& agg) {
    const auto k = static_cast<std::size_t>(section.integer_or("k", 1));
    const Rational eps = section.rational("eps");
    const Rational rate = section.rational("rate");
    const auto m = static_cast<std::size_t>(section.integer_or("m", 2));
    const auto n0 = static_cast<std::size_t>(section.integer("n0"));
    const auto doublings = static_cast<std::size_t>(section.integer_or("doublings", 5));
    const auto reps = static_cast<std::size_t>(section.integer_or("reps", 9));

    std::vector<double> medians;
    std::vector<std::size_t> block_lengths;
    std::size_t n = n0;
    for (std::size_t j = 0; j <= doublings; ++j, n *= 2) {
        std::uint64_t q = n + 1;
        while (!is_prime(q)) ++q;
        const auto rn = static_cast<std::size_t>(
            (static_cast<std::uint64_t>(n) * rate.num()) / rate.den());
        const FrsParams params = FrsParams::make(q, n, m, rn);
        const Rational delta = Rational(1) - params.rate();
        const Rational radius = delta - eps;
        std::vector<double> times;
        std::uint64_t outputs = 0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const std::uint64_t seed = mix_seed(master_seed, {section_idx, j, rep});
            Instance inst = make_instance(params, radius, "radius", 0, seed);
            AffineSubspace container =
                harness_container(params, inst.transmitted, k, mix_seed(seed, {0x117ULL}));
            const auto start = std::chrono::steady_clock::now();
            auto found = det_prune(inst.received, eps, container, delta);
            const auto stop = std::chrono::steady_clock::now();
            outputs += found.size();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        const double med = median(times);
        medians.push_back(med);
        block_lengths.push_back(params.block_len);
        ordered_json record;
        record["section"] = section.name;
        record["suite"] = "scaling";
        record["N"] = params.block_len;
        record["q"] = q;
        record["k"] = k;
        record["reps"] = reps;
        record["outputs"] = outputs;
        if (emit_timings) record["median_ms"] = med;
        out << record.dump() << '\n';
    }
    double worst_ratio = 0.0;
    for (std::size_t j = 1; j < medians.size(); ++j) {
        const double ratio = medians[j - 1] > 0 ? medians[j] / medians[j - 1] : 0.0;
        worst_ratio = std::max(worst_ratio, ratio);
        if (emit_timings)
            agg.put(section.name,
                    "ratio_N" + std::to_string(block_lengths[j - 1]) + "_to_N" +
                        std::to_string(block_lengths[j]),
                    ratio);
    }
    if (emit_timings) agg.put(section.name, "worst_doubling_ratio", worst_ratio);
    agg.put(section.name, "points", static_cast<std::uint64_t>(medians.size()));
}

void run_config(const Config& config, std::ostream& out) {
    const auto master_seed =
        static_cast<std::uint64_t>(config.globals.integer_or("master_seed", 0));
    const bool emit_timings = config.globals.str_or("emit_timings", "false") == "true";

    out << "# frs experiment report\n";
    Aggregator agg;
    for (std::size_t si = 0; si < config.sections.size(); ++si) {
        const Section& section = config.sections[si];
        const std::string suite = section.str("suite");
        if (suite == "decode")
            run_decode_section(section, si, master_seed, emit_timings, out, agg);
        else if (suite == "success")
            run_success_section(section, si, master_seed, out, agg);
        else if (suite == "listsize")
            run_listsize_section(section, si, master_seed, out, agg);
        else if (suite == "profile")
            run_profile_section(section, si, master_seed, out, agg);
        else if (suite == "scaling")
            run_scaling_section(section, si, master_seed, emit_timings, out, agg);
        else
            fail(ErrorKind::ConfigError, "section [" + section.name + "] (line " +
                                             std::to_string(section.line) +
                                             ") has unknown suite '" + suite + "'");
    }
    out << "# aggregate\n";
    out << "section,metric,value\n";
    for (const auto& [section, metrics] : agg.rows)
        for (const auto& [metric, value] : metrics)
            out << section << ',' << metric << ',' << value << '\n';
}

} // namespace

void run_experiment_text(const std::string& config_text, const std::string& out_path) {
    std::istringstream in(config_text);
    const Config config = parse_config(in);
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::ConfigError, "cannot open " + out_path + " for writing");
    run_config(config, out);
}

void run_experiment(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) fail(ErrorKind::ConfigError, "cannot open " + config_path);
    const Config config = parse_config(in);
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::ConfigError, "cannot open " + out_path + " for writing");
    run_config(config, out);
}

void run_bench(const std::string& suite, const std::string& out_path) {
    std::string config;
    if (suite == "scaling") {
        config =
            "master_seed = 2024\n"
            "emit_timings = true\n"
            "[scaling-k1]\n"
            "suite = scaling\n"
            "k = 1\n"
            "eps = 1/4\n"
            "rate = 1/8\n"
            "m = 2\n"
            "n0 = 128\n"
            "doublings = 5\n"
            "reps = 9\n"
            "[scaling-k2]\n"
            "suite = scaling\n"
            "k = 2\n"
            "eps = 1/4\n"
            "rate = 1/8\n"
            "m = 2\n"
            "n0 = 32\n"
            "doublings = 4\n"
            "reps = 5\n";
    } else if (suite == "success") {
        config =
            "master_seed = 7\n"
            "[success-curve]\n"
            "suite = success\n"
            "q = 61\n"
            "n = 54\n"
            "m = 9\n"
            "rn = 9\n"
            "s = 3\n"
            "k = 2\n"
            "errors = radius\n"
            "instances = 5\n"
            "trials = 2000\n";
    } else if (suite == "listsize") {
        config =
            "master_seed = 11\n"
            "[listsize-sweep]\n"
            "suite = listsize\n"
            "q = 17\n"
            "n = 15\n"
            "m = 3\n"
            "rn = 3\n"
            "s = 1,2,3\n"
            "errors = radius\n"
            "instances = 40\n";
    } else {
        fail(ErrorKind::ConfigError, "unknown bench suite '" + suite + "'");
    }
    run_experiment_text(config, out_path);
}

} // namespace frs
