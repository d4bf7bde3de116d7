#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frs/gf.hpp"

namespace frs {

/// Dense univariate polynomial over F_q, coefficients low-degree first.
/// Always normalized: no trailing zero coefficients.
class Poly {
public:
    Poly(std::uint64_t q, std::vector<std::uint64_t> coeffs);

    static Poly zero(std::uint64_t q) { return Poly(q, {}); }

    std::uint64_t modulus() const { return q_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    std::uint64_t eval(std::uint64_t x) const;

    /// [f(gamma^0), f(gamma^1), ..., f(gamma^{count-1})].
    /// Requires order(gamma) >= count so the evaluation points are distinct.
    std::vector<std::uint64_t> eval_geometric(std::uint64_t gamma, std::size_t count) const;

    Poly add(const Poly& other) const;
    Poly scale(std::uint64_t factor) const;

    /// Whitespace-separated decimal coefficients, low-degree first.
    std::string serialize() const;
    static Poly parse(std::uint64_t q, const std::string& text);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::uint64_t q_;
    std::vector<std::uint64_t> coeffs_;
};

} // namespace frs
