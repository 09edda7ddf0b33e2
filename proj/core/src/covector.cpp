#include "oig/covector.hpp"

#include <algorithm>
#include <cassert>

namespace oig {

std::string to_string(sign_vec v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int e = 0; e < n; ++e) s[static_cast<std::size_t>(e)] = to_char(v.get(e));
    return s;
}

sign_vec sign_vec_from_string(const std::string& s) {
    if (s.size() > static_cast<std::size_t>(max_ground_size))
        throw cap_error("sign string longer than 64");
    sign_vec v;
    for (int e = 0; e < static_cast<int>(s.size()); ++e)
        v.set(e, sign_from_char(s[static_cast<std::size_t>(e)]));
    return v;
}

bool sign_string_less(sign_vec a, sign_vec b, int n) {
    for (int e = 0; e < n; ++e) {
        char ca = to_char(a.get(e)), cb = to_char(b.get(e));
        if (ca != cb) return ca < cb;
    }
    return false;
}

covector covector_of(const flat_lattice& L, const signed_flat& sf) {
    if (sf.flat < 0 || sf.flat >= L.size()) throw error("covector_of: invalid flat id");
    mask_t gamma = L.gamma(sf.flat);
    if ((sf.plus & sf.minus) || ((sf.plus | sf.minus) != gamma))
        throw error("covector_of: assignment must be total on Gamma and defined nowhere else");
    mask_t full = sign_vec::low_mask(L.system().size());
    mask_t rest = full & ~gamma & ~L.xi(sf.flat);
    covector c;
    c.support = sf.flat;
    c.v.p = sf.plus | rest;
    c.v.m = sf.minus | rest;
    return c;
}

std::optional<int> support_of(const flat_lattice& L, sign_vec v) {
    int n = L.system().size();
    mask_t z = v.zeros(n);
    // the zero set of a covector is xi of its support
    for (int f = 0; f < L.size(); ++f) {
        if (L.xi(f) != z) continue;
        if (v.pm() != L.gamma(f)) return std::nullopt;
        return f;
    }
    return std::nullopt;
}

covector covector_from_signs(const flat_lattice& L, sign_vec v) {
    auto s = support_of(L, v);
    if (!s)
        throw error("not a covector of this greedoid: '" + to_string(v, L.system().size()) + "'");
    return covector{v, *s};
}

covector circ(const flat_lattice& L, const covector& a, const covector& b) {
    int c = L.join(a.support, b.support);
    mask_t region = L.gamma(c) | L.xi(c);
    mask_t out = sign_vec::low_mask(L.system().size()) & ~region;
    sign_vec s = star(a.v, b.v);
    s.p |= out;
    s.m |= out;
    covector r{s, c};
    if (extra_checks()) {
        auto sup = support_of(L, r.v);
        assert(sup && *sup == c && "product of covectors is not the covector of the product");
    }
    return r;
}

bool cov_leq(const flat_lattice& L, const covector& a, const covector& b) {
    bool pointwise = sign_leq_all(a.v, b.v);
    if (extra_checks()) {
        // signed-flat definition
        bool sf = L.leq(a.support, b.support);
        if (sf) {
            mask_t common = L.gamma(a.support) & L.gamma(b.support);
            sf = ((a.v.p ^ b.v.p) & common) == 0 && ((a.v.m ^ b.v.m) & common) == 0;
        }
        assert(sf == pointwise && "signed-flat order disagrees with pointwise order");
        bool prod = circ(L, a, b).v == b.v;
        assert(prod == pointwise && "product characterization disagrees with pointwise order");
    }
    return pointwise;
}

std::size_t covector_count(const flat_lattice& L) {
    std::size_t total = 0;
    for (int f = 0; f < L.size(); ++f) {
        int k = popcount(L.gamma(f));
        if (k > 20) throw cap_error("covector enumeration refused: |Gamma| exceeds 20");
        total += std::size_t{1} << k;
    }
    return total;
}

std::vector<covector> all_covectors(const flat_lattice& L) {
    std::vector<covector> out;
    out.reserve(covector_count(L));
    for (int f = 0; f < L.size(); ++f) {
        std::vector<int> g = elements_of(L.gamma(f));
        std::size_t count = std::size_t{1} << g.size();
        for (std::size_t choice = 0; choice < count; ++choice) {
            mask_t plus = 0, minus = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                ((choice >> i) & 1 ? minus : plus) |= bit(g[i]);
            out.push_back(covector_of(L, signed_flat{f, plus, minus}));
        }
    }
    std::sort(out.begin(), out.end(), [&](const covector& a, const covector& b) {
        return sign_string_less(a.v, b.v, L.system().size());
    });
    return out;
}

}  // namespace oig
