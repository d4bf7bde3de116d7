#pragma once

#include <cstdint>
#include <vector>

#include "frs/errors.hpp"

namespace frs {

/// Per-thread tally of prime-field operations, switched on by the
/// experiment harness when a report asks for operation counts.
struct FieldOpCounter {
    static thread_local bool enabled;
    static thread_local std::uint64_t count;

    static void reset() { count = 0; }
    static void bump() { if (enabled) ++count; }
};

bool is_prime(std::uint64_t n);

/// Arithmetic context for the prime field F_q. Elements are plain
/// uint64_t values in [0, q); the context validates q once.
class Gf {
public:
    explicit Gf(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        FieldOpCounter::bump();
        std::uint64_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        FieldOpCounter::bump();
        return a >= b ? a - b : a + q_ - b;
    }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        FieldOpCounter::bump();
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % q_);
    }

    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t div(std::uint64_t a, std::uint64_t b) const {
        if (b == 0) fail(ErrorKind::DivisionByZero, "division by zero in F_" + std::to_string(q_));
        return mul(a, inv(b));
    }

    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(std::uint64_t a) const;

private:
    std::uint64_t q_;
};

/// Smallest generator of the full multiplicative group of F_q.
std::uint64_t primitive_element(std::uint64_t q);

/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace frs
