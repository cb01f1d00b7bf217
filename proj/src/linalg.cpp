#include "sgr/linalg.hpp"

#include "sgr/errors.hpp"

namespace sgr::linalg {

std::vector<std::size_t> rref(Dense& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Scalar inv = m[row][col].inverse();
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Dense m, std::size_t ncols) { return rref(m, ncols).size(); }

std::vector<Vec> kernel(const Dense& m, std::size_t ncols) {
    Dense a = m;
    for (auto& r : a)
        if (r.size() != ncols) throw InputError("DimensionMismatch", "ragged matrix in kernel");
    auto piv = rref(a, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        Vec x(ncols);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vec> solve(const Dense& m, const Vec& b, std::size_t ncols) {
    if (b.size() != m.size()) throw InputError("DimensionMismatch", "rhs length");
    Dense a = m;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != ncols) throw InputError("DimensionMismatch", "ragged matrix in solve");
        a[r].push_back(b[r]);
    }
    auto piv = rref(a, ncols);
    for (std::size_t r = piv.size(); r < a.size(); ++r)
        if (!a[r][ncols].is_zero()) return std::nullopt;
    Vec x(ncols);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][ncols];
    return x;
}

}  // namespace sgr::linalg
