#include "oig/rco.hpp"

#include <algorithm>

#include "oig/topology.hpp"

namespace oig {

namespace {

struct tope_order_data {
    std::vector<int> topes;      // covector ids
    std::vector<mask_t> sep;     // separation from the base, aligned with topes
    std::vector<std::vector<int>> covers_up;  // positions
};

tope_order_data tope_order(const oriented_system& w, int base) {
    tope_order_data d;
    d.topes = w.topes();
    sign_vec b = w.at(base).v;
    for (int t : d.topes) d.sep.push_back(separation(b, w.at(t).v));
    std::size_t nt = d.topes.size();
    d.covers_up.assign(nt, {});
    for (std::size_t a = 0; a < nt; ++a)
        for (std::size_t c = 0; c < nt; ++c) {
            if (a == c || d.sep[a] == d.sep[c] || !subset_of(d.sep[a], d.sep[c])) continue;
            bool cover = true;
            for (std::size_t m = 0; m < nt && cover; ++m)
                if (m != a && m != c && d.sep[m] != d.sep[a] && d.sep[m] != d.sep[c] &&
                    subset_of(d.sep[a], d.sep[m]) && subset_of(d.sep[m], d.sep[c]))
                    cover = false;
            if (cover) d.covers_up[a].push_back(static_cast<int>(c));
        }
    return d;
}

// lexicographically least maximal chain of T(w, delta) passing through a
// given tope; every prefix below `through` extends, so greedy never backtracks
std::vector<int> gallery(const oriented_system& w, int delta, int through) {
    tope_order_data d = tope_order(w, delta);
    auto pos_of = [&](int cov) {
        return static_cast<std::size_t>(std::find(d.topes.begin(), d.topes.end(), cov) -
                                        d.topes.begin());
    };
    std::size_t cur = pos_of(delta), thr = pos_of(through);
    if (cur >= d.topes.size() || thr >= d.topes.size())
        throw internal_error("gallery: tope missing");
    int negdelta = w.find(negate(w.at(delta).v));
    if (negdelta < 0) throw internal_error("gallery: -delta missing");
    std::size_t goal = pos_of(negdelta);
    std::vector<int> chain{delta};
    bool visited = cur == thr;
    while (cur != goal) {
        int best = -1;
        for (int c : d.covers_up[cur]) {
            if (!visited && !subset_of(d.sep[static_cast<std::size_t>(c)], d.sep[thr])) continue;
            if (best < 0 || sign_string_less(w.at(d.topes[static_cast<std::size_t>(c)]).v,
                                             w.at(d.topes[static_cast<std::size_t>(best)]).v,
                                             w.n()))
                best = c;
        }
        if (best < 0) throw internal_error("gallery: stuck before reaching -delta");
        cur = static_cast<std::size_t>(best);
        if (cur == thr) visited = true;
        chain.push_back(d.topes[cur]);
    }
    if (!visited) throw internal_error("gallery: chain missed the required tope");
    return chain;
}

int common_subtope(const oriented_system& w, const std::vector<std::vector<int>>& below, int a,
                   int b) {
    int best = -1;
    for (int s : below[static_cast<std::size_t>(a)]) {
        const auto& bb = below[static_cast<std::size_t>(b)];
        if (std::find(bb.begin(), bb.end(), s) == bb.end()) continue;
        if (best < 0 || sign_string_less(w.at(s).v, w.at(best).v, w.n())) best = s;
    }
    if (best < 0) throw internal_error("rco: adjacent gallery topes share no subtope");
    return best;
}

rco_node lift(const rco_node& n, const std::vector<int>& preimage) {
    rco_node out;
    out.top = preimage[static_cast<std::size_t>(n.top)];
    for (int c : n.coatoms) out.coatoms.push_back(preimage[static_cast<std::size_t>(c)]);
    for (const rco_node& ch : n.children) out.children.push_back(lift(ch, preimage));
    return out;
}

// ordering for the interval below the tope `delta` of w, with the gallery
// chosen through the tope `through`
rco_node build_tope_interval(const oriented_system& w, int delta, int through) {
    rco_node node;
    node.top = delta;
    if (w.rank() <= 1) return node;  // rank-one interval: leaf

    std::vector<int> chain = gallery(w, delta, through);
    auto below = w.lower_cover_lists();
    std::vector<int> walls;       // subtope covector ids along the gallery
    std::vector<int> wall_flats;  // their supports G_1..G_r
    for (std::size_t i = 1; i < chain.size(); ++i) {
        int g = common_subtope(w, below, chain[i - 1], chain[i]);
        walls.push_back(g);
        wall_flats.push_back(w.at(g).support);
    }
    {
        std::vector<int> distinct = wall_flats;
        std::sort(distinct.begin(), distinct.end());
        if (std::unique(distinct.begin(), distinct.end()) != distinct.end())
            throw internal_error("rco: gallery walls are not distinct");
    }

    const std::vector<int>& facets = below[static_cast<std::size_t>(delta)];
    for (std::size_t i = 0; i < walls.size(); ++i) {
        std::vector<int> block_facets;
        for (int f : facets)
            if (w.at(f).support == wall_flats[i]) block_facets.push_back(f);
        if (block_facets.empty()) continue;

        mask_t x = w.lattice().at(wall_flats[i]).members.front();
        oig_contraction cm = contract_oig_with_map(w, x);
        const oriented_system& wi = cm.contracted;
        int gbar = cm.image[static_cast<std::size_t>(walls[i])];
        if (gbar < 0) throw internal_error("rco: gallery wall escaped its contraction");

        // blocks of the adapted extension of T(w_i, gbar): first the topes
        // separated from delta by an earlier wall, then the facets of delta,
        // then the rest
        std::vector<int> wtopes = wi.topes();
        auto block_of = [&](int t) {
            int up = cm.preimage[static_cast<std::size_t>(t)];
            for (std::size_t j = 0; j < i; ++j)
                if (separation(w.at(up).v, w.at(delta).v) &
                    w.lattice().xi(wall_flats[j]))
                    return 0;
            if (std::find(block_facets.begin(), block_facets.end(), up) != block_facets.end())
                return 1;
            return 2;
        };
        sign_vec gv = wi.at(gbar).v;
        std::stable_sort(wtopes.begin(), wtopes.end(), [&](int a, int b) {
            int ba = block_of(a), bb = block_of(b);
            if (ba != bb) return ba < bb;
            int sa = popcount(separation(gv, wi.at(a).v));
            int sb = popcount(separation(gv, wi.at(b).v));
            if (sa != sb) return sa < sb;
            return sign_string_less(wi.at(a).v, wi.at(b).v, wi.n());
        });
        // must be a linear extension of the tope poset based at gbar
        for (std::size_t a = 0; a < wtopes.size(); ++a)
            for (std::size_t b = a + 1; b < wtopes.size(); ++b) {
                mask_t sa = separation(gv, wi.at(wtopes[a]).v);
                mask_t sb = separation(gv, wi.at(wtopes[b]).v);
                if (sa != sb && subset_of(sb, sa))
                    throw internal_error("rco: adapted blocks break the tope poset order");
            }

        // facets of delta with this wall's support, in adapted order
        std::vector<int> ordered;
        for (int t : wtopes) {
            int up = cm.preimage[static_cast<std::size_t>(t)];
            if (std::find(block_facets.begin(), block_facets.end(), up) != block_facets.end())
                ordered.push_back(up);
        }
        if (ordered.size() != block_facets.size())
            throw internal_error("rco: facet lost by the contraction");
        for (int f : ordered) {
            int ft = cm.image[static_cast<std::size_t>(f)];
            if (ft < 0) throw internal_error("rco: facet escaped its contraction");
            node.coatoms.push_back(f);
            node.children.push_back(lift(build_tope_interval(wi, ft, gbar), cm.preimage));
        }
    }
    if (node.coatoms.size() != facets.size())
        throw internal_error("rco: some facet belongs to no gallery wall");
    return node;
}

}  // namespace

std::vector<int> default_tope_extension(const oriented_system& o, int base_tope) {
    std::vector<int> ext = o.topes();
    sign_vec b = o.at(base_tope).v;
    std::sort(ext.begin(), ext.end(), [&](int s, int t) {
        int ds = popcount(separation(b, o.at(s).v));
        int dt = popcount(separation(b, o.at(t).v));
        if (ds != dt) return ds < dt;
        return sign_string_less(o.at(s).v, o.at(t).v, o.n());
    });
    return ext;
}

rco_node recursive_coatom_ordering(const oriented_system& o, int base_tope,
                                   const std::vector<int>& ext) {
    if (!o.passed()) throw error("recursive_coatom_ordering: system failed validation");
    const auto& topes = o.topes();
    if (std::find(topes.begin(), topes.end(), base_tope) == topes.end())
        throw error("recursive_coatom_ordering: base is not a tope");
    {
        std::vector<int> a = ext, b = topes;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw error("recursive_coatom_ordering: ext is not a permutation of the topes");
    }
    // ext must linearly extend the tope poset based at base_tope
    sign_vec bv = o.at(base_tope).v;
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
            mask_t si = separation(bv, o.at(ext[i]).v);
            mask_t sj = separation(bv, o.at(ext[j]).v);
            if (si != sj && subset_of(sj, si))
                throw error("recursive_coatom_ordering: ext is not a linear extension");
        }

    rco_node root;
    root.top = o.size();  // the adjoined maximum
    if (o.rank() >= 1) {
        for (int t : ext) {
            root.coatoms.push_back(t);
            root.children.push_back(build_tope_interval(o, t, base_tope));
        }
    }
    rco_check chk = verify_rco(augment(o), root);
    if (!chk.ok)
        throw internal_error("recursive_coatom_ordering: verification failed: " + chk.violation);
    return root;
}

namespace {

bool verify_node(const finite_poset& p, const std::vector<int>& ranks, const rco_node& node,
                 const std::vector<int>& preds, std::string* violation) {
    auto fail = [&](const std::string& msg) {
        if (violation) *violation = "at " + p.name(node.top) + ": " + msg;
        return false;
    };
    int r = ranks[static_cast<std::size_t>(node.top)];
    if (r <= 1) {
        if (!node.coatoms.empty() || !node.children.empty())
            return fail("rank-one interval must be a leaf");
        return true;
    }
    std::vector<int> want = p.lower_covers(node.top);
    std::vector<int> have = node.coatoms;
    std::sort(want.begin(), want.end());
    {
        std::vector<int> sorted = have;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != want) return fail("coatom list does not match the interval's coatoms");
    }
    if (node.children.size() != node.coatoms.size())
        return fail("children do not align with coatoms");

    // (i), prefix part: coatoms below an earlier sibling of node.top come first
    bool seen_new = false;
    for (int q : node.coatoms) {
        bool below_pred = false;
        for (int pr : preds)
            if (p.leq(q, pr)) {
                below_pred = true;
                break;
            }
        if (below_pred && seen_new)
            return fail("coatom " + p.name(q) + " below an earlier sibling comes too late");
        if (!below_pred) seen_new = true;
    }

    // (ii): an element below q_i and an earlier q_j lies below a coatom of
    // [0, q_i] that is below an earlier q_k
    for (std::size_t i = 0; i < node.coatoms.size(); ++i) {
        int qi = node.coatoms[i];
        for (int z = 0; z < p.size(); ++z) {
            if (!p.leq(z, qi)) continue;
            bool below_earlier = false;
            for (std::size_t j = 0; j < i && !below_earlier; ++j)
                below_earlier = p.leq(z, node.coatoms[j]);
            if (!below_earlier) continue;
            bool found = false;
            for (int c : p.lower_covers(qi)) {
                if (!p.leq(z, c)) continue;
                for (std::size_t k = 0; k < i && !found; ++k) found = p.leq(c, node.coatoms[k]);
                if (found) break;
            }
            if (!found)
                return fail("element " + p.name(z) + " under " + p.name(qi) +
                            " has no shared coatom with earlier siblings");
        }
    }

    for (std::size_t i = 0; i < node.coatoms.size(); ++i) {
        std::vector<int> sub_preds(node.coatoms.begin(),
                                   node.coatoms.begin() + static_cast<std::ptrdiff_t>(i));
        if (node.children[i].top != node.coatoms[i])
            return fail("child top does not match its coatom");
        if (!verify_node(p, ranks, node.children[i], sub_preds, violation)) return false;
    }
    return true;
}

}  // namespace

rco_check verify_rco(const finite_poset& p, const rco_node& root) {
    rco_check out;
    auto top = p.top();
    auto ranks = p.ranks();
    if (!top || !p.bottom() || !ranks) {
        out.violation = "poset is not bounded and graded";
        return out;
    }
    if (root.top != *top) {
        out.violation = "root does not cover the whole poset";
        return out;
    }
    out.ok = verify_node(p, *ranks, root, {}, &out.violation);
    return out;
}

}  // namespace oig
