#include "frs/subspace.hpp"

#include <cstdlib>
#include <sstream>

namespace frs {

std::uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("FRS_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

AffineSubspace AffineSubspace::whole(std::shared_ptr<const SubspaceFrame> frame) {
    const std::size_t k = frame->dimension();
    const std::size_t n = frame->params.n;
    FqMatrix dirs(k, n, frame->params.q);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c)
            dirs.at(r, c) = frame->directions[r].flat()[c];
    if (rank_of(dirs) != k)
        fail(ErrorKind::BadParams, "frame directions are linearly dependent");

    AffineSubspace s;
    s.params_ = frame->params;
    s.frame_ = std::move(frame);
    s.system_ = FqMatrix(0, k + 1, s.params_.q);
    return s;
}

AffineSubspace AffineSubspace::empty(const FrsParams& params) {
    AffineSubspace s;
    s.params_ = params;
    s.empty_ = true;
    return s;
}

int AffineSubspace::dim() const {
    if (empty_) return -1;
    return static_cast<int>(frame_->dimension() - system_.rows);
}

AffineSubspace AffineSubspace::reduced_with(FqMatrix combined) const {
    const auto pivots = rref(combined);
    if (!pivots.empty() && pivots.back() == combined.cols - 1)
        return empty(params_);
    AffineSubspace s;
    s.params_ = params_;
    s.frame_ = frame_;
    s.system_ = std::move(combined);
    return s;
}

AffineSubspace AffineSubspace::condition(const FoldedWord& g, std::size_t symbol) const {
    if (empty_) return *this;
    if (symbol >= params_.block_len) fail(ErrorKind::BadParams, "symbol index out of range");
    const std::size_t k = frame_->dimension();
    Gf field(params_.q);
    FqMatrix combined = system_;
    for (std::size_t j = 0; j < params_.m; ++j) {
        std::vector<std::uint64_t> row(k + 1, 0);
        for (std::size_t r = 0; r < k; ++r) row[r] = frame_->directions[r].at(symbol, j);
        row[k] = field.sub(g.at(symbol, j), frame_->base.at(symbol, j));
        combined.append_row(row);
    }
    return reduced_with(std::move(combined));
}

AffineSubspace AffineSubspace::intersect(const AffineSubspace& other) const {
    if (!(params_ == other.params_))
        fail(ErrorKind::AmbientMismatch, "subspaces live in different codes");
    if (empty_) return *this;
    if (other.empty_) return other;
    const bool same_frame =
        frame_ == other.frame_ ||
        (frame_->base == other.frame_->base && frame_->directions == other.frame_->directions);
    if (!same_frame)
        fail(ErrorKind::AmbientMismatch, "subspaces are expressed over different ambient bases");
    FqMatrix combined = system_;
    for (std::size_t r = 0; r < other.system_.rows; ++r) {
        std::vector<std::uint64_t> row(other.system_.cols);
        for (std::size_t c = 0; c < other.system_.cols; ++c) row[c] = other.system_.at(r, c);
        combined.append_row(row);
    }
    return reduced_with(std::move(combined));
}

std::string AffineSubspace::canonical_key() const {
    if (empty_) fail(ErrorKind::BadParams, "the empty space has no canonical key");
    std::ostringstream out;
    out << system_.rows << 'x' << system_.cols << ':';
    for (std::size_t i = 0; i < system_.data.size(); ++i) {
        if (i) out << ',';
        out << system_.data[i];
    }
    return out.str();
}

FoldedWord AffineSubspace::point_at(const std::vector<std::uint64_t>& alpha) const {
    Gf field(params_.q);
    FoldedWord word = frame_->base;
    for (std::size_t r = 0; r < alpha.size(); ++r) {
        if (alpha[r] == 0) continue;
        const auto& dir = frame_->directions[r].flat();
        auto& flat = word.flat();
        for (std::size_t c = 0; c < flat.size(); ++c)
            flat[c] = field.add(flat[c], field.mul(alpha[r], dir[c]));
    }
    return word;
}

std::set<FoldedWord> AffineSubspace::enumerate(std::uint64_t budget) const {
    if (empty_) return {};
    const std::size_t k = frame_->dimension();
    auto solved = solve_affine(system_);
    // system_ is consistent by construction
    const std::size_t free_count = solved->kernel.size();
    __uint128_t total = 1;
    for (std::size_t i = 0; i < free_count; ++i) {
        total *= params_.q;
        if (total > budget)
            fail(ErrorKind::BudgetExceeded,
                 "enumeration needs q^" + std::to_string(free_count) + " > budget " +
                     std::to_string(budget));
    }
    Gf field(params_.q);
    std::set<FoldedWord> points;
    std::vector<std::uint64_t> assignment(free_count, 0);
    while (true) {
        std::vector<std::uint64_t> alpha = solved->particular;
        for (std::size_t i = 0; i < free_count; ++i) {
            if (assignment[i] == 0) continue;
            for (std::size_t r = 0; r < k; ++r)
                alpha[r] = field.add(alpha[r], field.mul(assignment[i], solved->kernel[i][r]));
        }
        points.insert(point_at(alpha));
        // odometer
        std::size_t pos = 0;
        while (pos < free_count && ++assignment[pos] == params_.q) {
            assignment[pos] = 0;
            ++pos;
        }
        if (pos == free_count) break;
    }
    return points;
}

FoldedWord AffineSubspace::unique_point() const {
    if (empty_ || dim() != 0)
        fail(ErrorKind::BadParams, "unique_point requires a zero-dimensional subspace");
    auto solved = solve_affine(system_);
    return point_at(solved->particular);
}

std::optional<std::vector<std::uint64_t>> AffineSubspace::frame_coordinates(
    const FoldedWord& word) const {
    const std::size_t k = frame_->dimension();
    const std::size_t n = params_.n;
    Gf field(params_.q);
    FqMatrix system(n, k + 1, params_.q);
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t r = 0; r < k; ++r)
            system.at(pos, r) = frame_->directions[r].flat()[pos];
        system.at(pos, k) = field.sub(word.flat()[pos], frame_->base.flat()[pos]);
    }
    auto solved = solve_affine(std::move(system));
    if (!solved) return std::nullopt;
    return solved->particular; // unique: directions are independent
}

bool AffineSubspace::contains(const FoldedWord& word) const {
    if (empty_) return false;
    if (!(word.modulus() == params_.q && word.fold() == params_.m &&
          word.block_length() == params_.block_len))
        return false;
    auto alpha = frame_coordinates(word);
    if (!alpha) return false;
    Gf field(params_.q);
    const std::size_t k = frame_->dimension();
    for (std::size_t r = 0; r < system_.rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < k; ++c)
            acc = field.add(acc, field.mul(system_.at(r, c), (*alpha)[c]));
        if (acc != system_.at(r, k)) return false;
    }
    return true;
}

SubspaceFrame AffineSubspace::extract_basis() const {
    if (empty_) fail(ErrorKind::BadParams, "the empty space has no basis");
    auto solved = solve_affine(system_);
    Gf field(params_.q);
    const std::size_t k = frame_->dimension();
    SubspaceFrame basis;
    basis.params = params_;
    basis.base = point_at(solved->particular);
    for (const auto& vec : solved->kernel) {
        FoldedWord dir(params_.q, params_.m, params_.block_len);
        auto& flat = dir.flat();
        for (std::size_t r = 0; r < k; ++r) {
            if (vec[r] == 0) continue;
            const auto& src = frame_->directions[r].flat();
            for (std::size_t c = 0; c < flat.size(); ++c)
                flat[c] = field.add(flat[c], field.mul(vec[r], src[c]));
        }
        basis.directions.push_back(std::move(dir));
    }
    return basis;
}

bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    if (a.empty_ != b.empty_) return false;
    if (a.empty_) return a.params_ == b.params_;
    return a.params_ == b.params_ && a.system_ == b.system_;
}

void write_subspace(std::ostream& out, const AffineSubspace& space) {
    auto basis = space.extract_basis();
    out << space.params().q << ' ' << basis.directions.size() << '\n';
    write_word(out, basis.base);
    for (const auto& dir : basis.directions) write_word(out, dir);
}

AffineSubspace read_subspace(std::istream& in, const FrsParams& params) {
    std::uint64_t q;
    std::size_t k;
    if (!(in >> q >> k)) fail(ErrorKind::ConfigError, "malformed subspace header");
    if (q != params.q) fail(ErrorKind::AmbientMismatch, "subspace field does not match the code");
    auto frame = std::make_shared<SubspaceFrame>();
    frame->params = params;
    frame->base = read_word(in);
    for (std::size_t i = 0; i < k; ++i) frame->directions.push_back(read_word(in));
    return AffineSubspace::whole(std::move(frame));
}

} // namespace frs
