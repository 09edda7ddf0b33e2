#include "oig/rational.hpp"

namespace oig {

qmat rref(qmat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        rational inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

int rank_of(const qmat& m) { return static_cast<int>(rref(m).size()); }

bool in_row_space(const qmat& reduced, const qvec& v) {
    qvec w = v;
    std::size_t cols = w.size();
    for (const qvec& row : reduced) {
        std::size_t lead = 0;
        while (lead < cols && row[lead] == 0) ++lead;
        if (lead == cols) continue;
        if (w[lead] == 0) continue;
        rational f = w[lead];  // row has a unit leading entry
        for (std::size_t j = lead; j < cols; ++j) w[j] -= f * row[j];
    }
    for (const rational& x : w)
        if (x != 0) return false;
    return true;
}

bool rowspace_contains(const qmat& reduced_a, const qmat& b) {
    for (const qvec& row : b)
        if (!in_row_space(reduced_a, row)) return false;
    return true;
}

}  // namespace oig
