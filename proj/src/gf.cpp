#include "frs/gf.hpp"

namespace frs {

thread_local bool FieldOpCounter::enabled = false;
thread_local std::uint64_t FieldOpCounter::count = 0;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Gf::Gf(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) fail(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
}

std::uint64_t Gf::inv(std::uint64_t a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
    FieldOpCounter::bump();
    // extended Euclid on (a, q)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t; new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t Gf::pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t result = 1;
    std::uint64_t b = base % q_;
    while (exp > 0) {
        if (exp & 1) result = mul(result, b);
        b = mul(b, b);
        exp >>= 1;
    }
    return result;
}

std::uint64_t Gf::order(std::uint64_t a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t p : prime_factors(q_ - 1)) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

std::uint64_t primitive_element(std::uint64_t q) {
    if (!is_prime(q)) fail(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
    if (q < 3) fail(ErrorKind::BadParams, "q must be at least 3");
    Gf field(q);
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool generates = true;
        for (std::uint64_t p : factors) {
            if (field.pow(g, (q - 1) / p) == 1) { generates = false; break; }
        }
        if (generates) return g;
    }
    fail(ErrorKind::BadParams, "no generator found");  // unreachable for prime q
}

} // namespace frs
