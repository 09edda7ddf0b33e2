#include "oig/complexified.hpp"

#include <algorithm>
#include <map>

namespace oig {

namespace {

// functionals on R^{2d} cutting out each generator subspace
qmat generator_constraints(const rational_arrangement& arr, bool real_part_too, int e) {
    int d = arr.dimension();
    qmat m;
    // the imaginary part of l_e vanishes on both H_e and H_e^Re
    qvec im(static_cast<std::size_t>(2 * d), 0);
    for (int a = 0; a < d; ++a) im[static_cast<std::size_t>(d + a)] = arr.form(e)[static_cast<std::size_t>(a)];
    m.push_back(std::move(im));
    if (real_part_too) {
        qvec re(static_cast<std::size_t>(2 * d), 0);
        for (int a = 0; a < d; ++a) re[static_cast<std::size_t>(a)] = arr.form(e)[static_cast<std::size_t>(a)];
        m.push_back(std::move(re));
    }
    return m;
}

}  // namespace

complexified_system complexified_ig(const rational_arrangement& arr) {
    if (!arr.essential()) throw error("complexified_ig: the arrangement is not essential");
    int n = arr.size();
    if (n > 6) throw cap_error("complexified_ig: more than 6 hyperplanes");

    // generators in canonical ground order: H_0..H_{n-1}, H_0^Re..H_{n-1}^Re
    std::vector<std::string> gen_names;
    std::vector<qmat> gen_cons;
    for (int e = 0; e < n; ++e) {
        gen_names.push_back("H" + std::to_string(e));
        gen_cons.push_back(rref(generator_constraints(arr, true, e)));
    }
    for (int e = 0; e < n; ++e) {
        gen_names.push_back("H" + std::to_string(e) + "re");
        gen_cons.push_back(rref(generator_constraints(arr, false, e)));
    }

    // all intersections of generator subsets, keyed by canonical constraints
    std::map<qmat, int> by_cons;
    std::vector<qmat> cons;
    std::vector<std::string> names;
    auto intern = [&](const qmat& c, const std::string& name) {
        auto it = by_cons.find(c);
        if (it != by_cons.end()) return it->second;
        int id = static_cast<int>(cons.size());
        by_cons.emplace(c, id);
        cons.push_back(c);
        names.push_back(name);
        return id;
    };
    std::vector<int> ground_elements;
    intern(qmat{}, "C^d");  // the whole space
    for (std::size_t g = 0; g < gen_cons.size(); ++g)
        ground_elements.push_back(intern(gen_cons[g], gen_names[g]));
    int gen_count = 2 * n;
    for (mask_t s = 0; s < (mask_t{1} << gen_count); ++s) {
        if (popcount(s) < 2) continue;
        qmat merged;
        for (int g : elements_of(s))
            for (const qvec& row : gen_cons[static_cast<std::size_t>(g)]) merged.push_back(row);
        merged = rref(std::move(merged));
        if (by_cons.find(merged) == by_cons.end())
            intern(merged, "V" + std::to_string(cons.size()));
    }

    // inclusion order: U <= W iff the constraints of W sit in U's row space
    int m = static_cast<int>(cons.size());
    std::vector<std::vector<char>> le(static_cast<std::size_t>(m),
                                      std::vector<char>(static_cast<std::size_t>(m), 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                rowspace_contains(cons[static_cast<std::size_t>(a)], cons[static_cast<std::size_t>(b)]);
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ||
                le[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                continue;
            bool cover = true;
            for (int c = 0; c < m && cover; ++c)
                if (c != a && c != b && le[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    le[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] &&
                    !le[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] &&
                    !le[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    cover = false;
            if (cover) covers.emplace_back(a, b);
        }

    complexified_system out;
    out.lattice = finite_poset::from_covers(names, covers);
    out.ground_elements = ground_elements;

    // E_A must be exactly the meet-irreducibles
    {
        std::vector<int> irr = out.lattice.meet_irreducibles();
        std::vector<int> want = ground_elements;
        std::sort(irr.begin(), irr.end());
        std::sort(want.begin(), want.end());
        if (irr != want)
            throw internal_error("complexified_ig: E_A differs from the meet-irreducibles");
    }

    semimodular_ig ig = ig_from_semimodular_lattice(out.lattice);
    // the meet-irreducibles come out in insertion order, which is canonical
    for (int e = 0; e < 2 * n; ++e)
        if (ig.sys.ground().label(e) != gen_names[static_cast<std::size_t>(e)])
            throw internal_error("complexified_ig: ground order is not canonical");
    out.sys = std::move(ig.sys);
    out.flat_to_subspace = std::move(ig.flat_to_element);

    // closed forms for xi and Gamma over every feasible set
    flat_lattice L = flat_lattice::build(out.sys, true);
    auto meet_of = [&](mask_t x) {
        qmat merged;
        for (int g : elements_of(x))
            for (const qvec& row : gen_cons[static_cast<std::size_t>(g)]) merged.push_back(row);
        merged = rref(std::move(merged));
        auto it = by_cons.find(merged);
        if (it == by_cons.end())
            throw internal_error("complexified_ig: an intersection escaped the lattice");
        return it->second;
    };
    auto leq_sub = [&](int a, int b) {
        return le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
    };
    for (mask_t x : out.sys.feasible()) {
        int M = meet_of(x);
        int f = L.flat_of(x);
        mask_t xi_expect = 0, gamma_expect = 0;
        for (int e = 0; e < 2 * n; ++e)
            if (leq_sub(M, ground_elements[static_cast<std::size_t>(e)])) xi_expect |= bit(e);
        for (int e = 0; e < n; ++e) {
            int he = ground_elements[static_cast<std::size_t>(e)];
            int hre = ground_elements[static_cast<std::size_t>(n + e)];
            if (!leq_sub(M, hre))
                gamma_expect |= bit(n + e);
            else if (!leq_sub(M, he))
                gamma_expect |= bit(e);
        }
        if (L.xi(f) != xi_expect)
            throw internal_error("complexified_ig: xi disagrees with the closed form");
        if (L.gamma(f) != gamma_expect)
            throw internal_error("complexified_ig: Gamma disagrees with the closed form");
    }
    return out;
}

oriented_system complexified_oig(const rational_arrangement& arr) {
    complexified_system cs = complexified_ig(arr);
    int n = arr.size();

    std::vector<std::string> covs;
    std::map<mask_t, std::vector<std::string>> sub_cache;
    for (const std::string& v : real_covectors(arr)) {
        mask_t zset = 0;
        for (int e = 0; e < n; ++e)
            if (v[static_cast<std::size_t>(e)] == '0') zset |= bit(e);
        auto it = sub_cache.find(zset);
        if (it == sub_cache.end()) {
            std::vector<qvec> sub;
            for (int e : elements_of(zset)) sub.push_back(arr.form(e));
            std::vector<std::string> res =
                zset ? real_covectors(rational_arrangement(arr.dimension(), sub))
                     : std::vector<std::string>{""};
            it = sub_cache.emplace(zset, std::move(res)).first;
        }
        std::vector<int> zpos = elements_of(zset);
        for (const std::string& u : it->second) {
            std::string alpha(static_cast<std::size_t>(2 * n), '?');
            for (int e = 0; e < n; ++e) {
                alpha[static_cast<std::size_t>(n + e)] = v[static_cast<std::size_t>(e)];
                alpha[static_cast<std::size_t>(e)] = v[static_cast<std::size_t>(e)] == '0' ? '?' : '1';
            }
            for (std::size_t i = 0; i < zpos.size(); ++i)
                alpha[static_cast<std::size_t>(zpos[i])] = u[i];
            // each pair stays within the five allowed values
            for (int e = 0; e < n; ++e) {
                char he = alpha[static_cast<std::size_t>(e)], hre = alpha[static_cast<std::size_t>(n + e)];
                bool ok = (hre == '0' && (he == '0' || he == '+' || he == '-')) ||
                          (he == '1' && (hre == '+' || hre == '-'));
                if (!ok) throw internal_error("complexified_oig: pair outside the five values");
            }
            covs.push_back(std::move(alpha));
        }
    }
    std::sort(covs.begin(), covs.end());
    covs.erase(std::unique(covs.begin(), covs.end()), covs.end());

    oriented_system o = oriented_system::validate(cs.sys, covs);
    if (!o.passed())
        throw internal_error("complexified_oig: the covector set failed validation");
    return o;
}

}  // namespace oig
