#include "foliate/linalg.hpp"

#include <algorithm>

namespace foliate {

namespace {

/* One column-elimination pass shared by both builds.  `parallel` switches
   the row loop onto OpenMP; arithmetic and pivot choice are identical. */
template <bool Parallel>
std::vector<std::size_t> rref_impl(Matrix& m) {
    const Ring& F = *m.ring;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        // first nonzero entry at or below `row` keeps the result canonical
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        mpq_class lead = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = F.mul(m.at(row, j), lead);

        const long nrows = long(m.rows);
#pragma omp parallel for schedule(dynamic) if (Parallel)
        for (long i = 0; i < nrows; ++i) {
            if (std::size_t(i) == row) continue;
            const mpq_class& f = m.at(std::size_t(i), col);
            if (f == 0) continue;
            mpq_class factor = f;  // copy before the column is zeroed
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(std::size_t(i), j) =
                    F.sub(m.at(std::size_t(i), j), F.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::size_t> rref_serial(Matrix& m) { return rref_impl<false>(m); }

std::vector<std::size_t> rref_parallel(Matrix& m) { return rref_impl<true>(m); }

std::vector<std::size_t> rref(Matrix& m, bool parallel) {
    return parallel ? rref_parallel(m) : rref_serial(m);
}

std::vector<std::vector<mpq_class>> kernel_basis(const Matrix& m_in, bool parallel) {
    Matrix m = m_in;
    const Ring& F = *m.ring;
    std::vector<std::size_t> pivots = rref(m, parallel);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(m.cols, mpq_class(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(Matrix m, bool parallel) { return rref(m, parallel).size(); }

}  // namespace foliate
