#include "oig/point_config.hpp"

#include <algorithm>

#include "oig/axioms.hpp"
#include "oig/fourier_motzkin.hpp"

namespace oig {

namespace {

// p in conv({points[e] : e in s})? exact: lambda >= 0, sum lambda = 1,
// sum lambda_e points[e] = p
bool in_hull(const point_configuration& pts, mask_t s, int p) {
    std::vector<int> gens = elements_of(s);
    int k = static_cast<int>(gens.size());
    if (k == 0) return false;
    std::vector<lin_constraint> cs;
    for (int i = 0; i < k; ++i) {
        lin_constraint c;
        c.coeffs.assign(static_cast<std::size_t>(k), 0);
        c.coeffs[static_cast<std::size_t>(i)] = 1;
        c.r = rel::ge;
        cs.push_back(std::move(c));
    }
    {
        lin_constraint c;
        c.coeffs.assign(static_cast<std::size_t>(k), 1);
        c.constant = -1;
        c.r = rel::eq;
        cs.push_back(std::move(c));
    }
    for (int a = 0; a < pts.d; ++a) {
        lin_constraint c;
        c.coeffs.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            c.coeffs[static_cast<std::size_t>(i)] =
                pts.points[static_cast<std::size_t>(gens[static_cast<std::size_t>(i)])][static_cast<std::size_t>(a)];
        c.constant = -pts.points[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)];
        c.r = rel::eq;
        cs.push_back(std::move(c));
    }
    return fm_feasible(k, std::move(cs));
}

}  // namespace

convex_geometry convex_geometry::build(const point_configuration& pts) {
    int n = static_cast<int>(pts.points.size());
    if (pts.d > 3) throw cap_error("convex_geometry: dimension above 3 is unsupported");
    if (n > 14) throw cap_error("convex_geometry: more than 14 points");
    if (static_cast<int>(pts.labels.size()) != n)
        throw error("convex_geometry: label count mismatch");
    for (const qvec& p : pts.points)
        if (static_cast<int>(p.size()) != pts.d) throw error("convex_geometry: point arity mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts.points[static_cast<std::size_t>(i)] == pts.points[static_cast<std::size_t>(j)])
                throw error("convex_geometry: duplicate points");

    convex_geometry g;
    g.pts_ = pts;
    std::size_t total = std::size_t{1} << n;
    g.tau_.assign(total, 0);
    for (mask_t s = 0; s < total; ++s) {
        mask_t t = s;
        for (int p = 0; p < n; ++p)
            if (!contains(s, p) && in_hull(pts, s, p)) t |= bit(p);
        g.tau_[s] = t;
    }

    // tau must be increasing, monotone and idempotent
    mask_t full = n == 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
    for (mask_t s = 0; s < total; ++s) {
        if (!subset_of(s, g.tau_[s])) throw internal_error("convex_geometry: tau not increasing");
        if (g.tau_[g.tau_[s]] != g.tau_[s]) throw internal_error("convex_geometry: tau not idempotent");
        for (int e : elements_of(full & ~s))
            if (!subset_of(g.tau_[s], g.tau_[s | bit(e)]))
                throw internal_error("convex_geometry: tau not monotone");
    }
    // (AE): x,y outside tau(S), x != y, y in tau(S u x)  =>  x not in tau(S u y)
    for (mask_t s = 0; s < total; ++s) {
        mask_t outside = full & ~g.tau_[s];
        for (int x : elements_of(outside))
            for (int y : elements_of(outside & ~bit(x)))
                if (contains(g.tau_[s | bit(x)], y) && contains(g.tau_[s | bit(y)], x))
                    throw internal_error("convex_geometry: anti-exchange fails");
    }

    // feasible sets are the complements of the closed sets
    std::vector<mask_t> members;
    for (mask_t s = 0; s < total; ++s)
        if (g.tau_[s] == s) members.push_back(full & ~s);
    g.sys_ = set_system(ground_set(pts.labels), std::move(members));
    axiom_report rep = check_axioms(g.sys_, axiom_class::antimatroid);
    if (!rep.passed) throw internal_error("convex_geometry: complements fail the antimatroid axioms");

    // Gamma(X) = ext(E \ X)
    for (mask_t x : g.sys_.feasible()) {
        mask_t gamma = 0;
        for (int e = 0; e < n; ++e)
            if (!contains(x, e) && g.sys_.is_feasible(x | bit(e))) gamma |= bit(e);
        if (gamma != g.ext(full & ~x))
            throw internal_error("convex_geometry: continuations differ from extreme points");
    }
    // closed sets are generated by their extreme points
    for (mask_t s = 0; s < total; ++s)
        if (g.tau_[s] == s && g.tau_[g.ext(s)] != s)
            throw internal_error("convex_geometry: tau(ext(X)) != X for a closed X");
    return g;
}

mask_t convex_geometry::tau(mask_t a) const {
    if (a >= tau_.size()) throw error("convex_geometry: subset out of range");
    return tau_[a];
}

mask_t convex_geometry::ext(mask_t a) const {
    mask_t out = 0;
    for (int x : elements_of(a))
        if (!contains(tau(a & ~bit(x)), x)) out |= bit(x);
    return out;
}

}  // namespace oig
