#include "uq/linalg.hpp"

namespace uq {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row. Pivot rule: first row with a nonzero entry in column order.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pr = row;
        while (pr < m.size() && m[pr][col].is_zero()) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        RationalFunction inv = m[row][col].inv();
        for (std::size_t c = col; c < ncols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            RationalFunction f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<Vec> null_space(Matrix m, std::size_t ncols) {
    std::vector<std::size_t> pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, RationalFunction(0));
        v[free] = RationalFunction(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Matrix m, Vec b) {
    std::size_t ncols = m.empty() ? 0 : m[0].size();
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
    std::vector<std::size_t> pivots = rref(m, ncols + 1);
    // A pivot in the augmented column means inconsistency.
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    Vec x(ncols, RationalFunction(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m[r][ncols];
    return x;
}

}  // namespace uq
