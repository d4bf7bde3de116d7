#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frs/gf.hpp"

namespace frs {

/// Dense row-major matrix over F_q.
struct FqMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> data;

    FqMatrix() = default;
    FqMatrix(std::size_t r, std::size_t c, std::uint64_t modulus)
        : rows(r), cols(c), q(modulus), data(r * c, 0) {}

    std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    void append_row(const std::vector<std::uint64_t>& row) {
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.q == b.q && a.data == b.data;
    }
};

/// In-place reduced row echelon form; pivots normalized to 1, eliminated
/// above and below, zero rows dropped. Returns pivot column indices
/// (one per remaining row, ascending). RREF is unique per row space, so
/// the result doubles as a canonical form.
std::vector<std::size_t> rref(FqMatrix& m);

/// Solution of the affine system [C | d] (last column is the right-hand
/// side): a particular solution plus a kernel basis for C. Empty optional
/// when inconsistent.
struct AffineSolution {
    std::vector<std::uint64_t> particular;            // length cols-1
    std::vector<std::vector<std::uint64_t>> kernel;   // each length cols-1
};
std::optional<AffineSolution> solve_affine(FqMatrix system);

/// Rank of the matrix (does not modify the argument).
std::size_t rank_of(FqMatrix m);

} // namespace frs
