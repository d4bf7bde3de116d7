#include "frs/frs_code.hpp"

#include <fstream>
#include <sstream>

#include "frs/linalg.hpp"
#include "frs/rng.hpp"

namespace frs {

FrsParams FrsParams::make(std::uint64_t q, std::size_t n, std::size_t m, std::size_t rn) {
    return make_with_gamma(q, n, m, rn, primitive_element(q));
}

FrsParams FrsParams::make_with_gamma(std::uint64_t q, std::size_t n, std::size_t m,
                                     std::size_t rn, std::uint64_t gamma) {
    if (!is_prime(q)) fail(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
    if (m == 0 || n == 0 || n % m != 0)
        fail(ErrorKind::BadParams, "folding parameter must divide the unfolded length");
    if (q <= n) fail(ErrorKind::BadParams, "field size must exceed the unfolded length");
    if (rn < 1 || rn >= n) fail(ErrorKind::BadParams, "degree bound must lie in [1, n)");
    Gf field(q);
    if (gamma == 0 || field.order(gamma) != q - 1)
        fail(ErrorKind::BadParams, "gamma must generate the multiplicative group");
    FrsParams p;
    p.q = q;
    p.n = n;
    p.m = m;
    p.block_len = n / m;
    p.rn = rn;
    p.gamma = gamma;
    return p;
}

FoldedWord::FoldedWord(std::uint64_t q, std::size_t m, std::size_t block_len,
                       std::vector<std::uint64_t> data)
    : q_(q), m_(m), block_len_(block_len), data_(std::move(data)) {
    if (data_.size() != m_ * block_len_)
        fail(ErrorKind::ShapeMismatch, "word data does not match its declared shape");
    for (auto v : data_)
        if (v >= q_) fail(ErrorKind::BadParams, "word entry out of field range");
}

bool FoldedWord::symbol_equal(const FoldedWord& other, std::size_t symbol) const {
    for (std::size_t j = 0; j < m_; ++j)
        if (at(symbol, j) != other.at(symbol, j)) return false;
    return true;
}

std::string FoldedWord::canonical() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i) out << ' ';
        out << data_[i];
    }
    return out.str();
}

FoldedWord encode(const FrsParams& params, const Poly& message) {
    if (message.degree() >= static_cast<int>(params.rn))
        fail(ErrorKind::DegreeTooHigh, "message degree " + std::to_string(message.degree()) +
                                           " reaches the bound " + std::to_string(params.rn));
    auto values = message.eval_geometric(params.gamma, params.n);
    return FoldedWord(params.q, params.m, params.block_len, std::move(values));
}

Rational folded_distance(const FoldedWord& u, const FoldedWord& v) {
    if (!u.same_shape(v)) fail(ErrorKind::ShapeMismatch, "words have different shapes");
    std::int64_t differing = 0;
    for (std::size_t i = 0; i < u.block_length(); ++i)
        if (!u.symbol_equal(v, i)) ++differing;
    return Rational(differing, static_cast<std::int64_t>(u.block_length()));
}

FoldedWord corrupt(const FoldedWord& word, std::size_t errors, std::uint64_t seed) {
    const std::size_t block_len = word.block_length();
    if (errors > block_len)
        fail(ErrorKind::TooManyErrors, "cannot corrupt more symbols than the block length");
    Rng rng(seed);
    // partial Fisher-Yates for the error positions
    std::vector<std::size_t> idx(block_len);
    for (std::size_t i = 0; i < block_len; ++i) idx[i] = i;
    for (std::size_t i = 0; i < errors; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(block_len - i));
        std::swap(idx[i], idx[j]);
    }
    FoldedWord out = word;
    const std::uint64_t q = word.modulus();
    for (std::size_t e = 0; e < errors; ++e) {
        const std::size_t pos = idx[e];
        bool differs = false;
        do {
            for (std::size_t j = 0; j < word.fold(); ++j)
                out.at(pos, j) = rng.below(q);
            differs = !out.symbol_equal(word, pos);
        } while (!differs);
    }
    return out;
}

Rational decoding_radius(std::size_t s, std::size_t m, const Rational& rate) {
    if (s < 1 || s > m) fail(ErrorKind::BadParams, "order s must lie in [1, m]");
    if (rate <= Rational(0) || rate >= Rational(1))
        fail(ErrorKind::BadParams, "rate must lie in (0, 1)");
    const auto si = static_cast<std::int64_t>(s);
    const auto mi = static_cast<std::int64_t>(m);
    Rational inner = Rational(1) - Rational(mi) * rate / Rational(mi - si + 1);
    return Rational(si, si + 1) * inner;
}

std::optional<Poly> decode_message(const FrsParams& params, const FoldedWord& word) {
    // f of degree < rn is determined by its first rn evaluations; solve the
    // Vandermonde system, then confirm on the remaining points.
    Gf field(params.q);
    FqMatrix system(params.rn, params.rn + 1, params.q);
    std::uint64_t point = 1;
    const auto& flat = word.flat();
    for (std::size_t r = 0; r < params.rn; ++r) {
        std::uint64_t p = 1;
        for (std::size_t c = 0; c < params.rn; ++c) {
            system.at(r, c) = p;
            p = field.mul(p, point);
        }
        system.at(r, params.rn) = flat[r];
        point = field.mul(point, params.gamma);
    }
    auto sol = solve_affine(std::move(system));
    if (!sol) return std::nullopt;
    Poly candidate(params.q, sol->particular);
    if (encode(params, candidate) == word) return candidate;
    return std::nullopt;
}

void write_word(std::ostream& out, const FoldedWord& word) {
    out << word.modulus() << ' ' << word.unfolded_length() << ' ' << word.fold() << ' '
        << word.block_length() << '\n';
    for (std::size_t i = 0; i < word.block_length(); ++i) {
        for (std::size_t j = 0; j < word.fold(); ++j) {
            if (j) out << ' ';
            out << word.at(i, j);
        }
        out << '\n';
    }
}

FoldedWord read_word(std::istream& in) {
    std::uint64_t q;
    std::size_t n, m, block_len;
    if (!(in >> q >> n >> m >> block_len))
        fail(ErrorKind::ConfigError, "malformed word header (expected 'q n m N')");
    if (m == 0 || n != m * block_len)
        fail(ErrorKind::ShapeMismatch, "word header is inconsistent");
    std::vector<std::uint64_t> data(n);
    for (auto& v : data)
        if (!(in >> v)) fail(ErrorKind::ConfigError, "word body is truncated");
    return FoldedWord(q, m, block_len, std::move(data));
}

void save_word(const std::string& path, const FoldedWord& word) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ConfigError, "cannot open " + path + " for writing");
    write_word(out, word);
}

FoldedWord load_word(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ConfigError, "cannot open " + path);
    return read_word(in);
}

} // namespace frs
