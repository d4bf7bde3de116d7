#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frs/harness.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) frs::fail(frs::ErrorKind::ConfigError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RationalOption {
    std::string text;
    bool set() const { return !text.empty(); }
    frs::Rational value() const { return frs::Rational::parse(text); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"folded Reed-Solomon list decoding up to capacity"};
    app.require_subcommand(1);

    // encode --q --n --m --rate-num --rate-den --message <file> --out <file>
    auto* encode_cmd = app.add_subcommand("encode", "encode a message polynomial");
    std::uint64_t q = 0;
    std::size_t n = 0, m = 0;
    std::int64_t rate_num = 0, rate_den = 0;
    std::string message_path, out_path, in_path;
    encode_cmd->add_option("--q", q)->required();
    encode_cmd->add_option("--n", n)->required();
    encode_cmd->add_option("--m", m)->required();
    encode_cmd->add_option("--rate-num", rate_num)->required();
    encode_cmd->add_option("--rate-den", rate_den)->required();
    encode_cmd->add_option("--message", message_path)->required();
    encode_cmd->add_option("--out", out_path)->required();

    // corrupt --in <file> --errors <e> --seed <u64> --out <file>
    auto* corrupt_cmd = app.add_subcommand("corrupt", "corrupt symbols of a word");
    std::size_t errors = 0;
    std::uint64_t seed = 0;
    corrupt_cmd->add_option("--in", in_path)->required();
    corrupt_cmd->add_option("--errors", errors)->required();
    corrupt_cmd->add_option("--seed", seed)->required();
    corrupt_cmd->add_option("--out", out_path)->required();

    // decode --in <file> --algo ... [--s] [--eps] [--beta] [--seed] [--oracle] --out <report>
    auto* decode_cmd = app.add_subcommand("decode", "list decode a received word");
    std::string algo_text = "det";
    int s_opt = 0;
    RationalOption eps_opt, beta_opt;
    bool with_oracle = false;
    decode_cmd->add_option("--in", in_path)->required();
    decode_cmd->add_option("--algo", algo_text)->required()
        ->check(CLI::IsMember({"det", "rand", "krsw", "brute"}));
    decode_cmd->add_option("--rate-num", rate_num)->required();
    decode_cmd->add_option("--rate-den", rate_den)->required();
    decode_cmd->add_option("--s", s_opt);
    decode_cmd->add_option("--eps", eps_opt.text);
    decode_cmd->add_option("--beta", beta_opt.text);
    decode_cmd->add_option("--seed", seed);
    decode_cmd->add_flag("--oracle", with_oracle);
    decode_cmd->add_option("--out", out_path)->required();

    // experiment --config <file> --out <report>
    auto* experiment_cmd = app.add_subcommand("experiment", "run an experiment grid");
    std::string config_path;
    experiment_cmd->add_option("--config", config_path)->required();
    experiment_cmd->add_option("--out", out_path)->required();

    // bench --suite scaling|success|listsize --out <report>
    auto* bench_cmd = app.add_subcommand("bench", "run a canned benchmark suite");
    std::string suite;
    bench_cmd->add_option("--suite", suite)->required()
        ->check(CLI::IsMember({"scaling", "success", "listsize"}));
    bench_cmd->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (encode_cmd->parsed()) {
            if (rate_den <= 0 || rate_num <= 0 ||
                (static_cast<std::int64_t>(n) * rate_num) % rate_den != 0)
                frs::fail(frs::ErrorKind::BadParams, "rate must make rn = n*rate integral");
            const auto rn = static_cast<std::size_t>(
                static_cast<std::int64_t>(n) * rate_num / rate_den);
            const auto params = frs::FrsParams::make(q, n, m, rn);
            const auto message = frs::Poly::parse(q, read_file(message_path));
            frs::save_word(out_path, frs::encode(params, message));
        } else if (corrupt_cmd->parsed()) {
            const auto word = frs::load_word(in_path);
            frs::save_word(out_path, frs::corrupt(word, errors, seed));
        } else if (decode_cmd->parsed()) {
            const auto word = frs::load_word(in_path);
            if (rate_den <= 0 || rate_num <= 0 ||
                (static_cast<std::int64_t>(word.unfolded_length()) * rate_num) % rate_den != 0)
                frs::fail(frs::ErrorKind::BadParams, "rate must make rn = n*rate integral");
            const auto rn = static_cast<std::size_t>(
                static_cast<std::int64_t>(word.unfolded_length()) * rate_num / rate_den);
            const auto params =
                frs::FrsParams::make(word.modulus(), word.unfolded_length(), word.fold(), rn);
            frs::DecodeOptions opts;
            if (s_opt > 0) opts.s = s_opt;
            if (eps_opt.set()) opts.eps = eps_opt.value();
            if (beta_opt.set()) opts.beta = beta_opt.value();
            opts.seed = seed;
            if (with_oracle) opts.oracle = frs::OracleMode::code;
            const auto report =
                frs::decode_end_to_end(params, word, frs::parse_algo(algo_text), opts);
            std::ofstream out(out_path);
            if (!out) frs::fail(frs::ErrorKind::ConfigError, "cannot open " + out_path);
            out << report.to_json(false) << '\n';
        } else if (experiment_cmd->parsed()) {
            frs::run_experiment(config_path, out_path);
        } else if (bench_cmd->parsed()) {
            frs::run_bench(suite, out_path);
        }
    } catch (const frs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
