#include "oig/topes.hpp"

#include <algorithm>
#include <map>

namespace oig {

tope_graph_t tope_graph(const oriented_system& o) {
    tope_graph_t g;
    g.topes = o.topes();
    auto below = o.lower_cover_lists();
    std::vector<char> is_tope(static_cast<std::size_t>(o.size()), 0);
    std::vector<int> pos(static_cast<std::size_t>(o.size()), -1);
    for (std::size_t k = 0; k < g.topes.size(); ++k) {
        is_tope[static_cast<std::size_t>(g.topes[k])] = 1;
        pos[static_cast<std::size_t>(g.topes[k])] = static_cast<int>(k);
    }
    // subtopes: covectors covered by some tope; adjacency = shared subtope
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < o.size(); ++s) {
        std::vector<int> over;
        for (int t : g.topes)
            if (std::find(below[static_cast<std::size_t>(t)].begin(),
                          below[static_cast<std::size_t>(t)].end(),
                          s) != below[static_cast<std::size_t>(t)].end())
                over.push_back(pos[static_cast<std::size_t>(t)]);
        for (std::size_t i = 0; i < over.size(); ++i)
            for (std::size_t j = i + 1; j < over.size(); ++j)
                edges.emplace_back(std::min(over[i], over[j]), std::max(over[i], over[j]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);

    // the restriction to Gamma(emptyset) identifies the tope graphs
    oriented_system uom = underlying_oriented_matroid(o);
    tope_graph_t ug;
    ug.topes = uom.topes();
    {
        auto ubelow = uom.lower_cover_lists();
        std::vector<int> upos(static_cast<std::size_t>(uom.size()), -1);
        for (std::size_t k = 0; k < ug.topes.size(); ++k)
            upos[static_cast<std::size_t>(ug.topes[k])] = static_cast<int>(k);
        std::vector<std::pair<int, int>> ue;
        for (int s = 0; s < uom.size(); ++s) {
            std::vector<int> over;
            for (int t : ug.topes)
                if (std::find(ubelow[static_cast<std::size_t>(t)].begin(),
                              ubelow[static_cast<std::size_t>(t)].end(),
                              s) != ubelow[static_cast<std::size_t>(t)].end())
                    over.push_back(upos[static_cast<std::size_t>(t)]);
            for (std::size_t i = 0; i < over.size(); ++i)
                for (std::size_t j = i + 1; j < over.size(); ++j)
                    ue.emplace_back(std::min(over[i], over[j]), std::max(over[i], over[j]));
        }
        std::sort(ue.begin(), ue.end());
        ue.erase(std::unique(ue.begin(), ue.end()), ue.end());
        ug.edges = std::move(ue);
    }
    if (ug.topes.size() != g.topes.size())
        throw internal_error("tope_graph: tope counts differ from the underlying oriented matroid");
    // match topes through restriction of sign vectors to Gamma(emptyset)
    std::vector<int> w_old;
    for (int e = 0; e < uom.n(); ++e)
        w_old.push_back(o.system().ground().index(uom.system().ground().label(e)));
    std::map<int, int> to_uom_pos;  // position in g.topes -> position in ug.topes
    for (std::size_t k = 0; k < g.topes.size(); ++k) {
        sign_vec r;
        for (int e = 0; e < uom.n(); ++e)
            r.set(e, o.at(g.topes[k]).v.get(w_old[static_cast<std::size_t>(e)]));
        int idx = uom.find(r);
        if (idx < 0) throw internal_error("tope_graph: restricted tope missing from the matroid");
        auto pit = std::find(ug.topes.begin(), ug.topes.end(), idx);
        if (pit == ug.topes.end())
            throw internal_error("tope_graph: restriction of a tope is not a tope");
        to_uom_pos[static_cast<int>(k)] = static_cast<int>(pit - ug.topes.begin());
    }
    std::vector<std::pair<int, int>> mapped;
    for (auto [a, b] : g.edges) {
        int ma = to_uom_pos[a], mb = to_uom_pos[b];
        mapped.emplace_back(std::min(ma, mb), std::max(ma, mb));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != ug.edges)
        throw internal_error("tope_graph: not isomorphic to the underlying oriented matroid's");
    return g;
}

tope_poset_t tope_poset(const oriented_system& o, int base_tope) {
    const auto& topes = o.topes();
    auto it = std::find(topes.begin(), topes.end(), base_tope);
    if (it == topes.end()) throw error("tope_poset: base is not a tope");
    tope_poset_t tp;
    tp.topes = topes;
    tp.base = static_cast<int>(it - topes.begin());

    const sign_vec base = o.at(base_tope).v;
    std::size_t nt = topes.size();
    std::vector<mask_t> sep(nt);
    for (std::size_t k = 0; k < nt; ++k) sep[k] = separation(base, o.at(topes[k]).v);

    // covers from the containment order on separation sets
    auto leq = [&](std::size_t a, std::size_t b) { return subset_of(sep[a], sep[b]); };
    std::vector<std::pair<int, int>> covers;
    for (std::size_t a = 0; a < nt; ++a)
        for (std::size_t b = 0; b < nt; ++b) {
            if (a == b || sep[a] == sep[b] || !leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < nt && cover; ++c)
                if (c != a && c != b && sep[c] != sep[a] && sep[c] != sep[b] && leq(a, c) &&
                    leq(c, b))
                    cover = false;
            if (cover) covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    std::vector<std::string> names;
    for (int t : topes) names.push_back(o.str(t));
    tp.poset = finite_poset::from_covers(std::move(names), std::move(covers));

    // base is the minimum and -base the maximum
    int neg = o.find(negate(base));
    if (neg < 0) throw internal_error("tope_poset: -base missing");
    for (std::size_t k = 0; k < nt; ++k) {
        if (!tp.poset.leq(tp.base, static_cast<int>(k)))
            throw internal_error("tope_poset: base is not the minimum");
        int negpos = static_cast<int>(std::find(topes.begin(), topes.end(), neg) - topes.begin());
        if (!tp.poset.leq(static_cast<int>(k), negpos))
            throw internal_error("tope_poset: -base is not the maximum");
    }

    // the Hasse diagram is an orientation of the tope graph
    tope_graph_t g = tope_graph(o);
    std::vector<std::pair<int, int>> hasse;
    for (auto [a, b] : tp.poset.cover_pairs())
        hasse.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(hasse.begin(), hasse.end());
    std::vector<std::pair<int, int>> tg = g.edges;
    std::sort(tg.begin(), tg.end());
    if (hasse != tg)
        throw internal_error("tope_poset: Hasse diagram is not an orientation of the tope graph");
    return tp;
}

}  // namespace oig
