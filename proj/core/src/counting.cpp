#include "oig/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace oig {

long long mobius_flats(const flat_lattice& L, int a, int b) {
    if (!L.leq(a, b)) throw error("mobius_flats: requires a <= b");
    // interval recursion, processed upward from a
    std::vector<int> interval;
    for (int c = 0; c < L.size(); ++c)
        if (L.leq(a, c) && L.leq(c, b)) interval.push_back(c);
    std::sort(interval.begin(), interval.end(),
              [&](int x, int y) { return L.corank(x) > L.corank(y); });
    std::map<int, long long> mu;
    for (int z : interval) {
        if (z == a) {
            mu[z] = 1;
            continue;
        }
        long long s = 0;
        for (int w : interval)
            if (w != z && L.leq(w, z)) s += mu[w];
        mu[z] = -s;
    }
    return mu[b];
}

flag_count_result flag_count(const oriented_system& o, const std::vector<int>& chain) {
    const flat_lattice& L = o.lattice();
    if (chain.empty() || chain.back() != L.bottom())
        throw error("flag_count: chain must end at the bottom flat");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i] == chain[i + 1] || !L.leq(chain[i + 1], chain[i]))
            throw error("flag_count: chain must be strictly descending");

    flag_count_result r;
    // observed: chains alpha_1 > ... > alpha_{k+1} with supp(alpha_i) = A_i
    std::vector<std::vector<int>> by_flat(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (int c = 0; c < o.size(); ++c)
            if (o.at(c).support == chain[i]) by_flat[i].push_back(c);
    auto dfs = [&](auto&& self, std::size_t level, int prev) -> long long {
        if (level == chain.size()) return 1;
        long long total = 0;
        for (int c : by_flat[level]) {
            if (prev >= 0 && !(o.leq(c, prev) && c != prev)) continue;
            total += self(self, level + 1, c);
        }
        return total;
    };
    r.observed = dfs(dfs, 0, -1);

    // predicted: product over the chain steps of sum of |mu(B, A_i)| over the
    // interval [A_{i+1}, A_i]
    r.predicted = 1;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        long long s = 0;
        for (int b = 0; b < L.size(); ++b)
            if (L.leq(chain[i + 1], b) && L.leq(b, chain[i]))
                s += std::abs(mobius_flats(L, b, chain[i]));
        r.predicted *= s;
    }
    return r;
}

std::vector<std::vector<int>> descending_flat_chains(const flat_lattice& L) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // build descending chains ending at bottom: choose a strictly descending
    // prefix, then append the bottom
    auto dfs = [&](auto&& self, int last) -> void {
        cur.push_back(L.bottom());
        out.push_back(cur);
        cur.pop_back();
        for (int next = 0; next < L.size(); ++next) {
            if (next == L.bottom()) continue;
            if (last >= 0 && !(L.leq(next, last) && next != last)) continue;
            cur.push_back(next);
            self(self, next);
            cur.pop_back();
        }
    };
    dfs(dfs, -1);
    return out;
}

embedding_report underlying_flat_embedding_checks(const oriented_system& o) {
    embedding_report rep;
    const flat_lattice& L = o.lattice();
    auto fail = [&](const std::string& msg) {
        rep.violation = msg;
        return rep;
    };

    oriented_system uom = underlying_oriented_matroid(o);
    const flat_lattice& M = uom.lattice();

    // i : flats of the restriction -> flats of Phi, [Y] -> [Y]
    std::vector<int> to_old;
    for (int e = 0; e < uom.n(); ++e)
        to_old.push_back(o.system().ground().index(uom.system().ground().label(e)));
    std::vector<int> i_map(static_cast<std::size_t>(M.size()), -1);
    for (int f = 0; f < M.size(); ++f) {
        mask_t y = M.at(f).members.front();
        mask_t up = 0;
        for (int e : elements_of(y)) up |= bit(to_old[static_cast<std::size_t>(e)]);
        i_map[static_cast<std::size_t>(f)] = L.flat_of(up);
    }

    // order embedding
    for (int a = 0; a < M.size(); ++a)
        for (int b = 0; b < M.size(); ++b)
            if (M.leq(a, b) != L.leq(i_map[static_cast<std::size_t>(a)],
                                     i_map[static_cast<std::size_t>(b)]))
                return fail("i is not an order embedding");
    // meet-preserving
    for (int a = 0; a < M.size(); ++a)
        for (int b = 0; b < M.size(); ++b)
            if (i_map[static_cast<std::size_t>(M.meet(a, b))] !=
                L.meet(i_map[static_cast<std::size_t>(a)], i_map[static_cast<std::size_t>(b)]))
                return fail("i does not preserve meets");

    // the image is exactly the set of meets of coatoms of Phi
    std::vector<int> coatoms;
    for (auto [lo, hi] : L.cover_pairs())
        if (hi == L.top()) coatoms.push_back(lo);
    std::vector<char> meet_generated(static_cast<std::size_t>(L.size()), 0);
    meet_generated[static_cast<std::size_t>(L.top())] = 1;  // empty meet
    bool grew = true;
    while (grew) {
        grew = false;
        for (int f = 0; f < L.size(); ++f) {
            if (!meet_generated[static_cast<std::size_t>(f)]) continue;
            for (int c : coatoms) {
                int m = L.meet(f, c);
                if (!meet_generated[static_cast<std::size_t>(m)]) {
                    meet_generated[static_cast<std::size_t>(m)] = 1;
                    grew = true;
                }
            }
        }
    }
    std::vector<int> image(i_map);
    std::sort(image.begin(), image.end());
    std::vector<int> generated;
    for (int f = 0; f < L.size(); ++f)
        if (meet_generated[static_cast<std::size_t>(f)]) generated.push_back(f);
    if (image != generated) return fail("image differs from the meets of coatoms");
    rep.image = image;

    // Möbius identities
    for (int f = 0; f < L.size(); ++f) {
        bool in_image = std::binary_search(image.begin(), image.end(), f);
        long long mu = mobius_flats(L, f, L.top());
        if (!in_image && mu != 0) return fail("mu does not vanish off the image");
    }
    for (int f = 0; f < M.size(); ++f) {
        long long mu_here = mobius_flats(M, f, M.top());
        long long mu_there = mobius_flats(L, i_map[static_cast<std::size_t>(f)], L.top());
        if (mu_here != mu_there) return fail("mu values disagree on the image");
        rep.tope_count_restricted += std::abs(mu_here);
    }
    for (int f = 0; f < L.size(); ++f)
        rep.tope_count_full += std::abs(mobius_flats(L, f, L.top()));
    if (rep.tope_count_full != rep.tope_count_restricted)
        return fail("tope-count sums disagree");
    rep.ok = true;
    return rep;
}

}  // namespace oig
