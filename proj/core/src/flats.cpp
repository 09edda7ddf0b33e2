#include "oig/flats.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace oig {

bool xi_lex_less(mask_t a, mask_t b) {
    if (a == b) return false;
    mask_t d = a ^ b;
    mask_t low = d & (~d + 1);  // first differing index
    mask_t above = ~((low << 1) - 1);
    if (a & low) return (b & above) == 0 ? false : true;
    return (a & above) == 0;  // a is a proper prefix of b
}

flat_lattice flat_lattice::build(const set_system& sys, bool trusted_input) {
    if (!trusted_input) {
        axiom_report rep = check_axioms(sys, axiom_class::interval_greedoid);
        if (!rep.passed)
            throw validation_error("flat_lattice: system fails the interval greedoid axioms (" +
                                   to_string(rep.violations.front().axiom) + ")");
    }
    flat_lattice L;
    L.sys_ = sys;

    // group feasible sets by continuation set
    std::unordered_map<mask_t, int> by_gamma;
    for (mask_t x : sys.feasible()) {
        mask_t g = 0;
        for (int e = 0; e < sys.size(); ++e)
            if (!contains(x, e) && sys.is_feasible(x | bit(e))) g |= bit(e);
        auto [it, fresh] = by_gamma.emplace(g, static_cast<int>(L.flats_.size()));
        if (fresh) L.flats_.push_back(flat{{}, g, 0, popcount(x)});
        flat& f = L.flats_[static_cast<std::size_t>(it->second)];
        f.members.push_back(x);
        f.xi |= x;
        if (f.corank != popcount(x))
            throw internal_error("flat_lattice: members of one class differ in size");
    }
    if (L.flats_.empty()) throw error("flat_lattice: empty family");

    // ids in decreasing corank, ties lexicographically by sorted xi
    std::sort(L.flats_.begin(), L.flats_.end(), [](const flat& a, const flat& b) {
        if (a.corank != b.corank) return a.corank > b.corank;
        return xi_lex_less(a.xi, b.xi);
    });
    for (int f = 0; f < L.size(); ++f)
        for (mask_t m : L.flats_[static_cast<std::size_t>(f)].members)
            L.flat_by_member_.emplace(m, f);

    L.rank_ = L.flats_.front().corank;
    L.bottom_ = 0;
    L.top_ = L.size() - 1;
    if (L.flats_.back().corank != 0)
        throw internal_error("flat_lattice: the class of the empty set is missing");
    if (L.size() > 1 && L.flats_[1].corank == L.rank_)
        throw internal_error("flat_lattice: several classes of maximal feasible sets");

    // join = mu(xi cap xi), meet = mu(xi cup xi); trusted callers rarely take
    // meets, so that table is only precomputed on the validated path
    std::size_t nf = static_cast<std::size_t>(L.size());
    L.join_.assign(nf * nf, -1);
    for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = a; b < nf; ++b) {
            int j = L.mu(L.flats_[a].xi & L.flats_[b].xi);
            L.join_[a * nf + b] = L.join_[b * nf + a] = j;
        }
    if (!trusted_input) {
        L.meet_.assign(nf * nf, -1);
        for (std::size_t a = 0; a < nf; ++a)
            for (std::size_t b = a; b < nf; ++b) {
                int m = L.mu(L.flats_[a].xi | L.flats_[b].xi);
                L.meet_[a * nf + b] = L.meet_[b * nf + a] = m;
            }
    }

    // cover pairs (lower, upper); lower semimodularity makes Phi graded by
    // corank, so with trusted input the corank step is enough
    if (trusted_input) {
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b)
                if (L.corank(a) == L.corank(b) + 1 && L.leq(a, b)) L.covers_.emplace_back(a, b);
    } else {
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b) {
                if (a == b || !L.leq(a, b)) continue;
                bool covered = true;
                for (int c = 0; c < L.size() && covered; ++c)
                    if (c != a && c != b && L.leq(a, c) && L.leq(c, b)) covered = false;
                if (covered) L.covers_.emplace_back(a, b);
            }
        L.verify();
    }
    return L;
}

void flat_lattice::verify() const {
    // antisymmetry: xi is injective
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (xi(a) == xi(b)) throw internal_error("flat_lattice: xi is not injective");

    // reverse inclusion on members induces the order
    for (mask_t x : sys_.feasible())
        for (mask_t y : sys_.feasible())
            if (subset_of(y, x) && !leq(flat_of(x), flat_of(y)))
                throw internal_error("flat_lattice: order violates reverse inclusion");

    // join and meet are least/greatest bounds
    for (int a = 0; a < size(); ++a)
        for (int b = a; b < size(); ++b) {
            int j = join(a, b), m = meet(a, b);
            if (!leq(a, j) || !leq(b, j) || !leq(m, a) || !leq(m, b))
                throw internal_error("flat_lattice: join/meet not bounds");
            for (int c = 0; c < size(); ++c) {
                if (leq(a, c) && leq(b, c) && !leq(j, c))
                    throw internal_error("flat_lattice: join not least");
                if (leq(c, a) && leq(c, b) && !leq(c, m))
                    throw internal_error("flat_lattice: meet not greatest");
            }
        }

    // graded by corank: every cover steps corank by one
    for (auto [a, b] : covers_)
        if (corank(a) != corank(b) + 1)
            throw internal_error("flat_lattice: cover relation is not graded by corank");
    if (corank(top_) != 0) throw internal_error("flat_lattice: top has nonzero corank");

    // lower semimodularity on the cover relation
    std::vector<std::vector<int>> below(static_cast<std::size_t>(size()));
    for (auto [a, b] : covers_) below[static_cast<std::size_t>(b)].push_back(a);
    auto is_cover = [&](int lo, int hi) {
        const auto& v = below[static_cast<std::size_t>(hi)];
        return std::find(v.begin(), v.end(), lo) != v.end();
    };
    for (int c = 0; c < size(); ++c) {
        const auto& lows = below[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < lows.size(); ++i)
            for (std::size_t j = i + 1; j < lows.size(); ++j) {
                int m = meet(lows[i], lows[j]);
                if (!is_cover(m, lows[i]) || !is_cover(m, lows[j]))
                    throw internal_error("flat_lattice: not lower semimodular");
            }
    }

    if (extra_checks()) {
        // existential definition of the order: [X] <= [Y] iff some Z in F/Y
        // has Y u Z ~ X
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                mask_t y = at(b).members.front();
                bool exists = false;
                for (mask_t f : sys_.feasible())
                    if (subset_of(y, f) && flat_of(f) == a) {
                        exists = true;
                        break;
                    }
                assert(exists == leq(a, b) && "existential order definition disagrees with xi");
            }
    }
}

int flat_lattice::mu(mask_t subset) const {
    mask_t best = 0;
    int best_size = -1;
    for (mask_t f : sys_.feasible()) {
        if (!subset_of(f, subset)) continue;
        int s = popcount(f);
        if (s > best_size) {
            best_size = s;
            best = f;
        } else if (extra_checks() && s == best_size) {
            // all maximal feasible subsets are equivalent
            bool maximal = true;
            for (mask_t g : sys_.feasible())
                if (g != f && subset_of(f, g) && subset_of(g, subset)) maximal = false;
            assert(!maximal || flat_of(f) == flat_of(best));
        }
    }
    if (best_size < 0) throw internal_error("flat_lattice: mu found no feasible subset");
    return flat_of(best);
}

int flat_lattice::flat_of(mask_t feasible) const {
    auto it = flat_by_member_.find(feasible);
    if (it == flat_by_member_.end()) throw error("flat_lattice: set is not feasible");
    return it->second;
}

finite_poset flat_lattice::poset() const {
    std::vector<std::string> names;
    for (int f = 0; f < size(); ++f) names.push_back(std::to_string(f));
    return finite_poset::from_covers(std::move(names), covers_);
}

semimodular_ig ig_from_semimodular_lattice(const finite_poset& lattice) {
    std::string why;
    if (!lattice.is_lattice(&why))
        throw validation_error("ig_from_semimodular_lattice: not a lattice: " + why);
    if (!lattice.lower_semimodular(&why))
        throw validation_error("ig_from_semimodular_lattice: not lower semimodular: " + why);
    auto top = lattice.top();
    if (!top) throw error("ig_from_semimodular_lattice: no top element");

    std::vector<int> irr = lattice.meet_irreducibles();
    std::vector<std::string> labels;
    labels.reserve(irr.size());
    for (int e : irr) labels.push_back(lattice.name(e));

    // X is feasible iff some ordering e_1..e_k has every running meet a cover
    // step; memoized on (current meet, remaining candidates)
    int ne = static_cast<int>(irr.size());
    if (ne > max_ground_size) throw cap_error("ig_from_semimodular_lattice: too many meet-irreducibles");
    std::map<std::pair<int, mask_t>, bool> memo;
    auto covered_by = [&](int lo, int hi) {
        const auto& ups = lattice.upper_covers(lo);
        return std::find(ups.begin(), ups.end(), hi) != ups.end();
    };
    auto dfs = [&](auto&& self, int meet_now, mask_t rest) -> bool {
        if (!rest) return true;
        auto key = std::make_pair(meet_now, rest);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (int i : elements_of(rest)) {
            int next = lattice.meet(meet_now, irr[static_cast<std::size_t>(i)]);
            if (next != meet_now && covered_by(next, meet_now) &&
                self(self, next, rest & ~bit(i))) {
                ok = true;
                break;
            }
        }
        memo.emplace(key, ok);
        return ok;
    };

    std::vector<mask_t> members;
    mask_t all = ne == 64 ? ~mask_t{0} : (mask_t{1} << ne) - 1;
    for (mask_t s = 0;; ++s) {
        if (dfs(dfs, *top, s)) members.push_back(s);
        if (s == all) break;
    }
    set_system sys(ground_set(std::move(labels)), std::move(members));

    // iso: flat -> running meet of any member
    flat_lattice L = flat_lattice::build(sys);
    std::vector<int> iso(static_cast<std::size_t>(L.size()), -1);
    for (int f = 0; f < L.size(); ++f) {
        mask_t x = L.at(f).members.front();
        int m = *top;
        for (int i : elements_of(x)) m = lattice.meet(m, irr[static_cast<std::size_t>(i)]);
        iso[static_cast<std::size_t>(f)] = m;
    }
    // phi is a poset isomorphism onto the lattice
    {
        std::vector<int> seen;
        for (int v : iso) seen.push_back(v);
        std::sort(seen.begin(), seen.end());
        if (std::unique(seen.begin(), seen.end()) != seen.end() ||
            static_cast<int>(seen.size()) != lattice.size())
            throw internal_error("ig_from_semimodular_lattice: flat map is not a bijection");
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b)
                if (L.leq(a, b) != lattice.leq(iso[static_cast<std::size_t>(a)],
                                               iso[static_cast<std::size_t>(b)]))
                    throw internal_error("ig_from_semimodular_lattice: flat map is not an isomorphism");
    }
    return semimodular_ig{std::move(sys), std::move(iso)};
}

}  // namespace oig
