#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frs/poly.hpp"
#include "frs/rational.hpp"

namespace frs {

/// Parameter bundle for an m-folded Reed-Solomon code: evaluation points
/// are the first n powers of gamma, grouped m to a symbol, messages are
/// polynomials of degree below rn.
struct FrsParams {
    std::uint64_t q = 0;     // field size (prime)
    std::size_t n = 0;       // unfolded length
    std::size_t m = 0;       // folding parameter
    std::size_t block_len = 0; // N = n / m
    std::size_t rn = 0;      // degree bound (rate = rn / n)
    std::uint64_t gamma = 0; // generator of F_q^*

    static FrsParams make(std::uint64_t q, std::size_t n, std::size_t m, std::size_t rn);
    /// Same validation but with a caller-chosen generator.
    static FrsParams make_with_gamma(std::uint64_t q, std::size_t n, std::size_t m,
                                     std::size_t rn, std::uint64_t gamma);

    Rational rate() const { return Rational(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(n)); }

    friend bool operator==(const FrsParams& a, const FrsParams& b) {
        return a.q == b.q && a.n == b.n && a.m == b.m && a.rn == b.rn && a.gamma == b.gamma;
    }
};

/// A word of (F_q^m)^N: N folded symbols of m field elements each.
/// Stored flat, symbol-major: entry (symbol i, row j) at index i*m + j.
class FoldedWord {
public:
    FoldedWord() = default;
    FoldedWord(std::uint64_t q, std::size_t m, std::size_t block_len)
        : q_(q), m_(m), block_len_(block_len), data_(m * block_len, 0) {}
    FoldedWord(std::uint64_t q, std::size_t m, std::size_t block_len, std::vector<std::uint64_t> data);

    std::uint64_t modulus() const { return q_; }
    std::size_t fold() const { return m_; }
    std::size_t block_length() const { return block_len_; }
    std::size_t unfolded_length() const { return m_ * block_len_; }

    std::uint64_t& at(std::size_t symbol, std::size_t row) { return data_[symbol * m_ + row]; }
    std::uint64_t at(std::size_t symbol, std::size_t row) const { return data_[symbol * m_ + row]; }
    const std::vector<std::uint64_t>& flat() const { return data_; }
    std::vector<std::uint64_t>& flat() { return data_; }

    bool symbol_equal(const FoldedWord& other, std::size_t symbol) const;
    bool same_shape(const FoldedWord& other) const {
        return q_ == other.q_ && m_ == other.m_ && block_len_ == other.block_len_;
    }

    /// One-line canonical form (flat entries, space separated).
    std::string canonical() const;

    friend bool operator==(const FoldedWord& a, const FoldedWord& b) {
        return a.q_ == b.q_ && a.m_ == b.m_ && a.block_len_ == b.block_len_ && a.data_ == b.data_;
    }
    friend bool operator<(const FoldedWord& a, const FoldedWord& b) {
        if (a.q_ != b.q_) return a.q_ < b.q_;
        if (a.m_ != b.m_) return a.m_ < b.m_;
        if (a.block_len_ != b.block_len_) return a.block_len_ < b.block_len_;
        return a.data_ < b.data_;
    }

private:
    std::uint64_t q_ = 0;
    std::size_t m_ = 0;
    std::size_t block_len_ = 0;
    std::vector<std::uint64_t> data_;
};

FoldedWord encode(const FrsParams& params, const Poly& message);

Rational folded_distance(const FoldedWord& u, const FoldedWord& v);

/// Replaces exactly `errors` uniformly chosen symbols with uniform columns
/// conditioned on differing from the original. Deterministic given seed.
FoldedWord corrupt(const FoldedWord& word, std::size_t errors, std::uint64_t seed);

/// s/(s+1) * (1 - m*R/(m-s+1)), exact.
Rational decoding_radius(std::size_t s, std::size_t m, const Rational& rate);

/// Recovers the message polynomial when `word` is a codeword; nullopt otherwise.
std::optional<Poly> decode_message(const FrsParams& params, const FoldedWord& word);

/// Word file format (bit-exact): header "q n m N", then N lines of m
/// decimal integers.
void write_word(std::ostream& out, const FoldedWord& word);
FoldedWord read_word(std::istream& in);
void save_word(const std::string& path, const FoldedWord& word);
FoldedWord load_word(const std::string& path);

} // namespace frs
