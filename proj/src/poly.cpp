#include "frs/poly.hpp"

#include <sstream>

namespace frs {

Poly::Poly(std::uint64_t q, std::vector<std::uint64_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) {
        if (c >= q_) fail(ErrorKind::BadParams, "coefficient out of range");
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    Gf field(q_);
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = field.add(field.mul(acc, x), *it);
    return acc;
}

std::vector<std::uint64_t> Poly::eval_geometric(std::uint64_t gamma, std::size_t count) const {
    Gf field(q_);
    if (count > 0 && (gamma == 0 || field.order(gamma) < count))
        fail(ErrorKind::OrderTooSmall,
             "element order is below the requested point count " + std::to_string(count));
    std::vector<std::uint64_t> values;
    values.reserve(count);
    std::uint64_t point = 1;
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(eval(point));
        point = field.mul(point, gamma);
    }
    return values;
}

Poly Poly::add(const Poly& other) const {
    if (q_ != other.q_) fail(ErrorKind::ShapeMismatch, "polynomials over different fields");
    Gf field(q_);
    std::vector<std::uint64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t a = i < coeffs_.size() ? coeffs_[i] : 0;
        std::uint64_t b = i < other.coeffs_.size() ? other.coeffs_[i] : 0;
        out[i] = field.add(a, b);
    }
    return Poly(q_, std::move(out));
}

Poly Poly::scale(std::uint64_t factor) const {
    Gf field(q_);
    std::vector<std::uint64_t> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.mul(coeffs_[i], factor % q_);
    return Poly(q_, std::move(out));
}

std::string Poly::serialize() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ' ';
        out << coeffs_[i];
    }
    return out.str();
}

Poly Poly::parse(std::uint64_t q, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::uint64_t> coeffs;
    std::uint64_t value;
    while (in >> value) coeffs.push_back(value % q);
    return Poly(q, std::move(coeffs));
}

} // namespace frs
