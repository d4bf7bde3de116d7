#include "frs/linalg.hpp"

#include <algorithm>

namespace frs {

std::vector<std::size_t> rref(FqMatrix& m) {
    Gf field(m.q);
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < m.cols; ++c)
                std::swap(m.at(sel, c), m.at(pivot_row, c));
        const std::uint64_t scale = field.inv(m.at(pivot_row, col));
        for (std::size_t c = col; c < m.cols; ++c)
            m.at(pivot_row, c) = field.mul(m.at(pivot_row, c), scale);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == pivot_row || m.at(r, col) == 0) continue;
            const std::uint64_t factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(pivot_row, c)));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    m.data.resize(pivot_row * m.cols);
    m.rows = pivot_row;
    return pivots;
}

std::optional<AffineSolution> solve_affine(FqMatrix system) {
    Gf field(system.q);
    const std::size_t vars = system.cols - 1;
    const auto pivots = rref(system);
    // a pivot in the RHS column means 0 = 1
    if (!pivots.empty() && pivots.back() == vars) return std::nullopt;

    std::vector<bool> is_pivot(vars, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    AffineSolution sol;
    sol.particular.assign(vars, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.particular[pivots[r]] = system.at(r, vars);

    for (std::size_t free_col = 0; free_col < vars; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> vec(vars, 0);
        vec[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            vec[pivots[r]] = field.neg(system.at(r, free_col));
        sol.kernel.push_back(std::move(vec));
    }
    return sol;
}

std::size_t rank_of(FqMatrix m) {
    return rref(m).size();
}

} // namespace frs
