#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frs/detprune.hpp"
#include "frs/interp.hpp"
#include "frs/randprune.hpp"

namespace frs {

enum class Algo { det, rand, krsw, brute };

Algo parse_algo(const std::string& name);
const char* algo_name(Algo algo);

/// Every message of degree below rn, encoded and filtered by strict
/// distance. Guarded by the enumeration budget (q^rn points).
std::set<FoldedWord> brute_force_list(const FrsParams& params, const FoldedWord& g,
                                      const Rational& radius,
                                      std::uint64_t budget = default_enumeration_budget());

enum class OracleMode { none, code, container };

struct DecodeOptions {
    std::optional<int> s;          // container order / radius choice
    std::optional<Rational> eps;   // overrides the radius for det/krsw
    Rational beta{1, 10};
    std::uint64_t seed = 0;
    OracleMode oracle = OracleMode::none;
    // pruning isolation: build the container around a known list instead of
    // interpolating
    bool use_harness_container = false;
    std::set<FoldedWord> harness_list;
    std::size_t harness_dim = 1;
    std::uint64_t krsw_trials = 1000;
    bool count_field_ops = false;
    DetPruneConfig det_config;
};

struct DecodeReport {
    FrsParams params;
    std::string algo;
    int s = 0;
    Rational eps{0};
    Rational beta{0};
    Rational radius{0};
    std::uint64_t seed = 0;
    int container_dim = -2; // -2 when no container was built
    std::vector<std::string> output; // canonical codeword lines, sorted
    std::optional<std::vector<std::string>> oracle;
    std::optional<bool> agreement;
    std::uint64_t trials = 0;
    std::optional<double> success_frequency;
    std::optional<std::uint64_t> field_ops;
    std::optional<std::vector<std::size_t>> profile_sizes;
    bool outputs_verified = false;
    double wall_ms = 0.0; // emitted only when a report asks for timings

    std::string to_json(bool emit_timings) const;
};

DecodeReport decode_end_to_end(const FrsParams& params, const FoldedWord& g, Algo algo,
                               const DecodeOptions& options);

/// Largest error count whose normalized distance stays strictly below the
/// radius.
std::size_t max_errors_below(const Rational& radius, std::size_t block_len);

/// Grid runner: parses the line-oriented config, executes every section,
/// and writes one JSON record per run plus trailing aggregate CSV rows.
/// Bit-reproducible given (config, master seed).
void run_experiment(const std::string& config_path, const std::string& out_path);
void run_experiment_text(const std::string& config_text, const std::string& out_path);

/// Canned experiment grids.
void run_bench(const std::string& suite, const std::string& out_path);

} // namespace frs
