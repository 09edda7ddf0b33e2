#include "oig/topology.hpp"

#include <algorithm>
#include <map>

namespace oig {

finite_poset covector_poset(const oriented_system& o, bool augmented) {
    std::vector<std::string> names;
    for (int i = 0; i < o.size(); ++i) names.push_back(o.str(i));
    std::vector<std::pair<int, int>> covers;
    auto below = o.lower_cover_lists();
    for (int j = 0; j < o.size(); ++j)
        for (int i : below[static_cast<std::size_t>(j)]) covers.emplace_back(i, j);
    if (augmented) {
        int top = o.size();
        names.push_back("1^");
        for (int t : o.topes()) covers.emplace_back(t, top);
    }
    return finite_poset::from_covers(std::move(names), std::move(covers));
}

std::vector<int> cells_by_rank(const oriented_system& o) {
    std::vector<int> cells(static_cast<std::size_t>(o.rank()), 0);
    for (int i = 0; i < o.size(); ++i) {
        int r = o.rank_of(i);
        if (r >= 1) cells[static_cast<std::size_t>(r - 1)]++;
    }
    return cells;
}

bool is_thin(const finite_poset& p, std::string* first_violation) {
    auto ranks = p.ranks();
    if (!p.bounded() || !ranks) throw error("is_thin: poset must be bounded and graded");
    for (int x = 0; x < p.size(); ++x)
        for (int z = 0; z < p.size(); ++z) {
            if ((*ranks)[static_cast<std::size_t>(z)] != (*ranks)[static_cast<std::size_t>(x)] + 2)
                continue;
            if (!p.less(x, z)) continue;
            int mid = 0;
            for (int y = 0; y < p.size(); ++y)
                if (p.less(x, y) && p.less(y, z)) ++mid;
            if (mid != 2) {
                if (first_violation)
                    *first_violation = "[" + p.name(x) + ", " + p.name(z) + "] has " +
                                       std::to_string(mid + 2) + " elements";
                return false;
            }
        }
    return true;
}

simplicial_complex order_complex(const finite_poset& p) {
    auto bot = p.bottom(), top = p.top();
    if (!bot || !top) throw error("order_complex: poset must be bounded");
    std::vector<int> proper;
    for (int i = 0; i < p.size(); ++i)
        if (i != *bot && i != *top) proper.push_back(i);
    // order the vertices by a linear extension so every chain is an
    // index-increasing sequence
    std::vector<std::pair<int, int>> keyed;
    for (int v : proper) {
        int below = 0;
        for (int w : proper)
            if (p.less(w, v)) ++below;
        keyed.emplace_back(below, v);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < proper.size(); ++i) proper[i] = keyed[i].second;
    simplicial_complex c;
    c.vertices = static_cast<int>(proper.size());
    // vertex k is proper[k]; enumerate chains by DFS in index order
    std::vector<std::vector<int>> chain_stack;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int last) -> void {
        for (int k = last + 1; k < static_cast<int>(proper.size()); ++k) {
            if (!cur.empty() &&
                !p.less(proper[static_cast<std::size_t>(cur.back())], proper[static_cast<std::size_t>(k)]))
                continue;
            cur.push_back(k);
            int d = static_cast<int>(cur.size()) - 1;
            if (d >= static_cast<int>(c.faces_by_dim.size())) c.faces_by_dim.resize(static_cast<std::size_t>(d) + 1);
            c.faces_by_dim[static_cast<std::size_t>(d)].push_back(cur);
            self(self, k);
            cur.pop_back();
        }
    };
    dfs(dfs, -1);
    return c;
}

namespace {

// Smith normal form diagonal of an integer matrix (rows x cols), returned as
// the list of nonzero invariant factors d_1 | d_2 | ...
std::vector<bigint> smith_diagonal(std::vector<std::vector<bigint>> m) {
    std::vector<bigint> diag;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find a nonzero pivot of least absolute value
        std::size_t pr = r0, pc = c0;
        bigint best = 0;
        for (std::size_t i = r0; i < rows; ++i)
            for (std::size_t j = c0; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                bigint a = abs(m[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        std::swap(m[r0], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        bool clean = true;
        for (std::size_t i = r0 + 1; i < rows; ++i) {
            if (m[i][c0] == 0) continue;
            bigint q = m[i][c0] / m[r0][c0];
            for (std::size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
            if (m[i][c0] != 0) clean = false;
        }
        for (std::size_t j = c0 + 1; j < cols; ++j) {
            if (m[r0][j] == 0) continue;
            bigint q = m[r0][j] / m[r0][c0];
            for (std::size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
            if (m[r0][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; pick a smaller pivot again
        // divisibility: fold in any entry the pivot does not divide
        bool folded = false;
        for (std::size_t i = r0 + 1; i < rows && !folded; ++i)
            for (std::size_t j = c0 + 1; j < cols && !folded; ++j)
                if (m[i][j] % m[r0][c0] != 0) {
                    for (std::size_t jj = c0; jj < cols; ++jj) m[r0][jj] += m[i][jj];
                    folded = true;
                }
        if (folded) continue;
        diag.push_back(abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    return diag;
}

}  // namespace

bool homology_report::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool homology_report::matches_sphere(int d) const {
    if (!torsion_free()) return false;
    for (int i = 0; i < static_cast<int>(betti.size()); ++i)
        if (betti[static_cast<std::size_t>(i)] != (i == d ? 1 : 0)) return false;
    if (d >= static_cast<int>(betti.size()) && d >= 0) return false;
    return euler == 1 + ((d % 2 == 0) ? 1 : -1);
}

homology_report homology_evidence(const simplicial_complex& c) {
    if (c.vertices == 0) throw error("homology_evidence: empty complex");
    homology_report rep;
    int dim = c.dimension();
    for (int d = 0; d <= dim; ++d) {
        rep.face_counts.push_back(c.face_count(d));
        rep.euler += (d % 2 == 0 ? 1 : -1) * c.face_count(d);
    }
    if (static_cast<long long>(c.faces_by_dim.empty() ? 0 : c.faces_by_dim[0].size()) >
        (1 << 20))
        throw cap_error("homology_evidence: complex too large");

    // reduced chain complex over the integers; the augmentation map feeds
    // dimension -1
    std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        int k = 0;
        for (const auto& f : c.faces_by_dim[static_cast<std::size_t>(d)])
            index[static_cast<std::size_t>(d)][f] = k++;
    }
    auto boundary = [&](int d) {
        // rows: (d-1)-faces (or the single augmentation row), cols: d-faces
        std::size_t rows = d == 0 ? 1 : static_cast<std::size_t>(c.face_count(d - 1));
        std::size_t cols = static_cast<std::size_t>(c.face_count(d));
        std::vector<std::vector<bigint>> m(rows, std::vector<bigint>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& f = c.faces_by_dim[static_cast<std::size_t>(d)][j];
            if (d == 0) {
                m[0][j] = 1;
                continue;
            }
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (t != drop) sub.push_back(f[t]);
                int i = index[static_cast<std::size_t>(d - 1)].at(sub);
                m[static_cast<std::size_t>(i)][j] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    };

    std::vector<long long> rank_d(static_cast<std::size_t>(dim) + 2, 0);
    std::vector<std::vector<bigint>> diag_d(static_cast<std::size_t>(dim) + 2);
    for (int d = 0; d <= dim; ++d) {
        auto sd = smith_diagonal(boundary(d));
        rank_d[static_cast<std::size_t>(d)] = static_cast<long long>(sd.size());
        diag_d[static_cast<std::size_t>(d)] = std::move(sd);
    }
    // reduced H_d = ker(bd_d) / im(bd_{d+1}); torsion from the invariant
    // factors of bd_{d+1}
    for (int d = 0; d <= dim; ++d) {
        long long kernel = c.face_count(d) - rank_d[static_cast<std::size_t>(d)];
        long long img = d + 1 <= dim ? rank_d[static_cast<std::size_t>(d + 1)] : 0;
        rep.betti.push_back(kernel - img);
        std::vector<bigint> tor;
        if (d + 1 <= dim)
            for (const bigint& v : diag_d[static_cast<std::size_t>(d + 1)])
                if (v > 1) tor.push_back(v);
        rep.torsion.push_back(std::move(tor));
    }
    return rep;
}

}  // namespace oig
