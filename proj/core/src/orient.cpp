#include "oig/orient.hpp"

#include <algorithm>
#include <cassert>

namespace oig {

void oriented_system::finish() {
    std::sort(covs_.begin(), covs_.end(), [&](const covector& a, const covector& b) {
        return sign_string_less(a.v, b.v, n());
    });
    covs_.erase(std::unique(covs_.begin(), covs_.end()), covs_.end());
    index_.clear();
    for (int i = 0; i < size(); ++i) index_.emplace(covs_[static_cast<std::size_t>(i)].v, i);
    topes_.clear();
    for (int i = 0; i < size(); ++i)
        if (covs_[static_cast<std::size_t>(i)].support == lat_.top()) topes_.push_back(i);
}

int oriented_system::find(const sign_vec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> oriented_system::strings() const {
    std::vector<std::string> out;
    out.reserve(covs_.size());
    for (int i = 0; i < size(); ++i) out.push_back(str(i));
    return out;
}

int oriented_system::bottom_index() const {
    int found = -1;
    for (int i = 0; i < size(); ++i)
        if (covs_[static_cast<std::size_t>(i)].support == lat_.bottom()) {
            if (found >= 0) throw internal_error("several covectors with bottom support");
            found = i;
        }
    if (found < 0) throw internal_error("no covector with bottom support");
    return found;
}

std::vector<std::vector<int>> oriented_system::lower_cover_lists() const {
    std::vector<std::vector<int>> below(covs_.size());
    for (int j = 0; j < size(); ++j)
        for (int i = 0; i < size(); ++i)
            if (rank_of(i) + 1 == rank_of(j) && leq(i, j))
                below[static_cast<std::size_t>(j)].push_back(i);
    return below;
}

oriented_system oriented_system::trusted(flat_lattice lat, std::vector<covector> covs) {
    oriented_system o;
    o.lat_ = std::move(lat);
    o.covs_ = std::move(covs);
    o.rep_.passed = true;
    o.finish();
    return o;
}

oriented_system oriented_system::validate(const set_system& sys,
                                          const std::vector<std::string>& covs,
                                          bool all_witnesses) {
    std::vector<sign_vec> vs;
    vs.reserve(covs.size());
    for (const auto& s : covs) {
        if (static_cast<int>(s.size()) != sys.size())
            throw error("covector string '" + s + "' does not match the ground set size");
        vs.push_back(sign_vec_from_string(s));
    }
    return validate(flat_lattice::build(sys), vs, all_witnesses);
}

oriented_system oriented_system::validate(flat_lattice lat, const std::vector<sign_vec>& covs,
                                          bool all_witnesses) {
    oriented_system o;
    o.lat_ = std::move(lat);
    const int n = o.n();
    for (sign_vec v : covs) {
        auto s = support_of(o.lat_, v);
        if (!s) {
            o.rep_.non_covectors.push_back(to_string(v, n));
            continue;
        }
        o.covs_.push_back(covector{v, *s});
    }
    std::sort(o.rep_.non_covectors.begin(), o.rep_.non_covectors.end());
    o.rep_.non_covectors.erase(
        std::unique(o.rep_.non_covectors.begin(), o.rep_.non_covectors.end()),
        o.rep_.non_covectors.end());
    o.finish();
    orientation_report& rep = o.rep_;

    // OG1: supp is surjective
    std::vector<char> seen(static_cast<std::size_t>(o.lat_.size()), 0);
    for (const covector& c : o.covs_) seen[static_cast<std::size_t>(c.support)] = 1;
    for (int f = 0; f < o.lat_.size(); ++f)
        if (!seen[static_cast<std::size_t>(f)]) rep.og1_missing_flats.push_back(f);

    // OG2: closed under negation
    for (int i = 0; i < o.size(); ++i)
        if (o.find(negate(o.at(i).v)) < 0) rep.og2_missing_negations.push_back(o.str(i));

    // OG3: closed under the product
    for (int i = 0; i < o.size() && (all_witnesses || rep.og3_ok()); ++i)
        for (int j = 0; j < o.size(); ++j) {
            covector p = circ(o.lat_, o.at(i), o.at(j));
            if (o.find(p.v) < 0) {
                rep.og3_missing_products.push_back({o.str(i), o.str(j), to_string(p.v, n)});
                if (!all_witnesses) break;
            }
        }

    // OG4: elimination. For x in S(a,b) with (a o b)(x) != 1 there must be a
    // gamma with gamma(x) = 0 agreeing with a o b = b o a wherever the product
    // is not one outside S(a,b).
    mask_t full = sign_vec::low_mask(n);
    for (int i = 0; i < o.size() && (all_witnesses || rep.og4_ok()); ++i)
        for (int j = 0; j < o.size() && (all_witnesses || rep.og4_ok()); ++j) {
            mask_t sep = separation(o.at(i).v, o.at(j).v);
            if (!sep) continue;
            covector ab = circ(o.lat_, o.at(i), o.at(j));
            covector ba = circ(o.lat_, o.at(j), o.at(i));
            mask_t fixed = ~sep & ~ab.v.ones() & full;  // positions gamma must match
            bool commute = (((ab.v.p ^ ba.v.p) | (ab.v.m ^ ba.v.m)) & fixed) == 0;
            for (int x : elements_of(sep & ~ab.v.ones())) {
                bool found = false;
                if (commute) {
                    for (const covector& g : o.covs_) {
                        if (g.v.get(x) != sign_symbol::zero) continue;
                        if ((((g.v.p ^ ab.v.p) | (g.v.m ^ ab.v.m)) & fixed) == 0) {
                            found = true;
                            break;
                        }
                    }
                }
                if (!found) {
                    rep.og4_failures.push_back({o.str(i), o.str(j), x});
                    if (!all_witnesses) break;
                }
            }
        }

    rep.passed = rep.non_covectors.empty() && rep.og1_ok() && rep.og2_ok() && rep.og3_ok() &&
                 rep.og4_ok();
    return o;
}

oriented_system oig_from_antimatroid(const set_system& sys) {
    axiom_report rep = check_axioms(sys, axiom_class::antimatroid);
    if (!rep.passed)
        throw validation_error("oig_from_antimatroid: system fails the antimatroid axioms (" +
                               to_string(rep.violations.front().axiom) + ")");
    flat_lattice lat = flat_lattice::build(sys);
    std::vector<covector> all = all_covectors(lat);
    std::vector<sign_vec> vs;
    vs.reserve(all.size());
    for (const covector& c : all) vs.push_back(c.v);
    oriented_system o = oriented_system::validate(std::move(lat), vs);
    if (!o.passed())
        throw internal_error("oig_from_antimatroid: the covector set failed validation");
    return o;
}

namespace {

// index translation between two ground sets related by label
std::vector<int> old_indices(const ground_set& sub, const ground_set& super) {
    std::vector<int> map(static_cast<std::size_t>(sub.size()));
    for (int i = 0; i < sub.size(); ++i)
        map[static_cast<std::size_t>(i)] = super.index(sub.label(i));
    return map;
}

}  // namespace

oriented_system contract_oig(const oriented_system& o, mask_t x) {
    return contract_oig_with_map(o, x).contracted;
}

oig_contraction contract_oig_with_map(const oriented_system& o, mask_t x) {
    const set_system& sys = o.system();
    if (!sys.is_feasible(x)) throw error("contract_oig: X is not feasible");
    set_system csys = contract(sys, x);
    flat_lattice clat = flat_lattice::build(csys);
    std::vector<int> to_old = old_indices(csys.ground(), sys.ground());

    // flat of the contraction -> flat [X u Y] of the original
    std::vector<int> phi(static_cast<std::size_t>(clat.size()), -1);
    for (int f = 0; f < clat.size(); ++f) {
        mask_t y = clat.at(f).members.front();
        mask_t up = x;
        for (int e : elements_of(y)) up |= bit(to_old[static_cast<std::size_t>(e)]);
        phi[static_cast<std::size_t>(f)] = o.lattice().flat_of(up);
    }
    int fx = o.lattice().flat_of(x);

    // con_X(alpha): zero on xi/X, alpha on Gamma/X, one elsewhere
    std::vector<int> kept;
    std::vector<sign_vec> images;
    mask_t cfull = sign_vec::low_mask(csys.size());
    for (int i = 0; i < o.size(); ++i) {
        const covector& a = o.at(i);
        if (!o.lattice().leq(a.support, fx)) continue;
        int cf = -1;
        for (int f = 0; f < clat.size(); ++f)
            if (phi[static_cast<std::size_t>(f)] == a.support) {
                cf = f;
                break;
            }
        if (cf < 0) throw internal_error("contract_oig: support missing from the contraction");
        sign_vec v;
        v.p = v.m = cfull & ~clat.xi(cf) & ~clat.gamma(cf);
        for (int e : elements_of(clat.gamma(cf)))
            v.set(e, a.v.get(to_old[static_cast<std::size_t>(e)]));
        kept.push_back(i);
        images.push_back(v);
    }

    oriented_system result = oriented_system::validate(std::move(clat), images);
    if (!result.passed()) throw internal_error("contract_oig: contraction failed validation");

    // con_X is a product-preserving bijection from {alpha : supp <= [X]}
    if (static_cast<int>(kept.size()) != result.size())
        throw internal_error("contract_oig: con_X is not injective");
    std::unordered_map<sign_vec, std::size_t, sign_vec_hash> pos;
    for (std::size_t k = 0; k < kept.size(); ++k) pos.emplace(o.at(kept[k]).v, k);
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j) {
            covector p = circ(o.lattice(), o.at(kept[i]), o.at(kept[j]));
            auto it = pos.find(p.v);
            if (it == pos.end())
                throw internal_error("contract_oig: domain not closed under the product");
            covector q = circ(result.lattice(), result.at(result.find(images[i])),
                              result.at(result.find(images[j])));
            if (!(q.v == images[it->second]))
                throw internal_error("contract_oig: con_X does not preserve products");
        }

    oig_contraction out;
    out.image.assign(static_cast<std::size_t>(o.size()), -1);
    out.preimage.assign(static_cast<std::size_t>(result.size()), -1);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        int ci = result.find(images[k]);
        out.image[static_cast<std::size_t>(kept[k])] = ci;
        out.preimage[static_cast<std::size_t>(ci)] = kept[k];
    }
    out.contracted = std::move(result);
    return out;
}

namespace {

// res_W(alpha) over the restricted lattice; to_old maps restricted indices up
sign_vec res_image(const flat_lattice& rlat, const std::vector<int>& to_old,
                   const flat_lattice& lat, const covector& a) {
    // A|_W = mu|_W(W cap xi(A)), computed inside the restriction
    mask_t xiA = lat.xi(a.support);
    mask_t inside = 0;
    for (int e = 0; e < rlat.system().size(); ++e)
        if (contains(xiA, to_old[static_cast<std::size_t>(e)])) inside |= bit(e);
    int af = rlat.mu(inside);
    mask_t rfull = sign_vec::low_mask(rlat.system().size());
    sign_vec v;
    v.p = v.m = rfull & ~rlat.xi(af) & ~rlat.gamma(af);
    for (int e : elements_of(rlat.gamma(af)))
        v.set(e, a.v.get(to_old[static_cast<std::size_t>(e)]));
    return v;
}

}  // namespace

restriction_result restrict_oig(const oriented_system& o, mask_t w) {
    const set_system& sys = o.system();
    if (!subset_of(w, sys.ground().full())) throw error("restrict_oig: W is not a subset of E");
    set_system rsys = restrict_to(sys, w);
    flat_lattice rlat = flat_lattice::build(rsys);
    std::vector<int> to_old = old_indices(rsys.ground(), sys.ground());

    bool hypothesis = true;
    std::vector<sign_vec> images;
    for (int i = 0; i < o.size(); ++i) {
        sign_vec v = res_image(rlat, to_old, o.lattice(), o.at(i));
        images.push_back(v);
        // alpha|_W, literally
        sign_vec lit;
        for (int e = 0; e < rsys.size(); ++e)
            lit.set(e, o.at(i).v.get(to_old[static_cast<std::size_t>(e)]));
        if (!(lit == v)) hypothesis = false;
    }
    oriented_system restricted = oriented_system::validate(std::move(rlat), images);
    if (!restricted.report().non_covectors.empty())
        throw internal_error("restrict_oig: res_W produced a non-covector");
    if (!restricted.report().og1_ok() || !restricted.report().og2_ok() ||
        !restricted.report().og3_ok())
        throw internal_error("restrict_oig: (OG1)-(OG3) failed on a restriction");
    if (hypothesis && !restricted.passed())
        throw internal_error("restrict_oig: hypothesis holds but (OG4) failed");
    return restriction_result{std::move(restricted), hypothesis};
}

oriented_system restrict_to_xi(const oriented_system& o, mask_t x) {
    if (!o.system().is_feasible(x)) throw error("restrict_to_xi: X is not feasible");
    int fx = o.lattice().flat_of(x);
    restriction_result r = restrict_oig(o, o.lattice().xi(fx));
    if (!r.restricted.passed())
        throw internal_error("restrict_to_xi: restriction to xi(X) failed validation");
    const oriented_system& R = r.restricted;

    // semigroup isomorphism res(beta) -> alpha o beta onto {beta : beta >= alpha}
    int a0 = -1;
    for (int i = 0; i < o.size(); ++i)
        if (o.at(i).support == fx) {
            a0 = i;
            break;
        }
    if (a0 < 0) throw internal_error("restrict_to_xi: no covector with support [X]");
    std::vector<int> above;  // {beta >= alpha0}
    for (int i = 0; i < o.size(); ++i)
        if (o.leq(a0, i)) above.push_back(i);
    if (static_cast<int>(above.size()) != R.size())
        throw internal_error("restrict_to_xi: |L restricted| != |{beta >= alpha}|");

    std::vector<int> to_old = old_indices(R.system().ground(), o.system().ground());
    // f(res(beta)) = alpha0 o beta over every preimage beta, so the check also
    // covers well-definedness across preimages outside {beta >= alpha0}
    std::vector<int> f(static_cast<std::size_t>(R.size()), -1);
    for (int b = 0; b < o.size(); ++b) {
        sign_vec img = res_image(R.lattice(), to_old, o.lattice(), o.at(b));
        int ri = R.find(img);
        if (ri < 0) throw internal_error("restrict_to_xi: res image missing");
        covector ab = circ(o.lattice(), o.at(a0), o.at(b));
        int up = o.find(ab.v);
        if (up < 0) throw internal_error("restrict_to_xi: alpha o beta escaped the system");
        if (f[static_cast<std::size_t>(ri)] >= 0 && f[static_cast<std::size_t>(ri)] != up)
            throw internal_error("restrict_to_xi: res(beta) -> alpha o beta is not well-defined");
        f[static_cast<std::size_t>(ri)] = up;
    }
    for (int v : f)
        if (v < 0) throw internal_error("restrict_to_xi: the map is not surjective");
    for (int i = 0; i < R.size(); ++i)
        for (int j = 0; j < R.size(); ++j) {
            covector rp = circ(R.lattice(), R.at(i), R.at(j));
            int rk = R.find(rp.v);
            covector up = circ(o.lattice(), o.at(f[static_cast<std::size_t>(i)]),
                               o.at(f[static_cast<std::size_t>(j)]));
            if (!(o.at(f[static_cast<std::size_t>(rk)]).v == up.v))
                throw internal_error("restrict_to_xi: the map does not preserve products");
        }
    return r.restricted;
}

oriented_system underlying_oriented_matroid(const oriented_system& o) {
    mask_t w = o.lattice().gamma(o.lattice().top());
    restriction_result r = restrict_oig(o, w);
    if (!r.hypothesis_holds)
        throw internal_error("underlying_oriented_matroid: res != pointwise restriction");
    if (!r.restricted.passed())
        throw internal_error("underlying_oriented_matroid: validation failed");
    axiom_report mat = check_axioms(r.restricted.system(), axiom_class::matroid);
    if (!mat.passed)
        throw internal_error("underlying_oriented_matroid: restriction is not a matroid");
    for (int i = 0; i < r.restricted.size(); ++i)
        if (r.restricted.at(i).v.ones())
            throw internal_error("underlying_oriented_matroid: covector takes the value one");
    return std::move(r.restricted);
}

covector oig_bottom(const oriented_system& o) {
    return o.at(o.bottom_index());
}

covector drop_witness(const oriented_system& o, const covector& a, const covector& b) {
    if (!o.lattice().leq(a.support, b.support))
        throw error("drop_witness: requires supp(a) <= supp(b)");
    if (sign_leq_all(a.v, b.v)) throw error("drop_witness: requires a not<= b");
    if (o.find(a.v) < 0 || o.find(b.v) < 0)
        throw error("drop_witness: arguments must belong to the system");
    mask_t fixed = ~separation(a.v, b.v) & ~b.v.ones() & sign_vec::low_mask(o.n());
    int want_rank = o.lattice().rank_of(b.support) - 1;
    int best = -1;
    for (int i = 0; i < o.size(); ++i) {
        const covector& d = o.at(i);
        if (o.lattice().rank_of(d.support) != want_rank) continue;
        if (!sign_leq_all(d.v, b.v) || d.v == b.v) continue;
        if ((((d.v.p ^ b.v.p) | (d.v.m ^ b.v.m)) & fixed) != 0) continue;
        if (best < 0 || sign_string_less(d.v, o.at(best).v, o.n())) best = i;
    }
    if (best < 0) throw internal_error("drop_witness: no witness exists; the system is not oriented");
    return o.at(best);
}

std::vector<covector> og4_witnesses(const oriented_system& o, const covector& a,
                                    const covector& b, int x) {
    mask_t sep = separation(a.v, b.v);
    if (!contains(sep, x)) throw error("og4_witnesses: x is not in the separation set");
    covector ab = circ(o.lattice(), a, b);
    covector ba = circ(o.lattice(), b, a);
    if (ab.v.get(x) == sign_symbol::one)
        throw error("og4_witnesses: the product is one at x");
    mask_t fixed = ~sep & ~ab.v.ones() & sign_vec::low_mask(o.n());
    std::vector<covector> out;
    if ((((ab.v.p ^ ba.v.p) | (ab.v.m ^ ba.v.m)) & fixed) != 0) return out;
    for (int i = 0; i < o.size(); ++i) {
        const covector& g = o.at(i);
        if (g.v.get(x) != sign_symbol::zero) continue;
        if ((((g.v.p ^ ab.v.p) | (g.v.m ^ ab.v.m)) & fixed) == 0) out.push_back(g);
    }
    return out;
}

rank2_report classify_rank2(const oriented_system& o) {
    if (o.rank() != 2) throw error("classify_rank2: system is not of rank 2");
    const flat_lattice& L = o.lattice();
    int coatoms = 0;
    for (int f = 0; f < L.size(); ++f)
        if (L.rank_of(f) == 1) ++coatoms;

    rank2_report rep;
    if (coatoms == 1) {
        rep.kind = rank2_case::single_coatom_five;
        if (o.size() != 5) return rep;
        std::vector<int> mids, tops;
        for (int i = 0; i < o.size(); ++i) {
            if (o.rank_of(i) == 1) mids.push_back(i);
            if (o.rank_of(i) == 2) tops.push_back(i);
        }
        if (mids.size() != 2 || tops.size() != 2) return rep;
        bool pairs = o.at(mids[0]).v == negate(o.at(mids[1]).v) &&
                     o.at(tops[0]).v == negate(o.at(tops[1]).v);
        bool complete = true;
        for (int m : mids)
            for (int t : tops) complete = complete && o.leq(m, t);
        int b = o.bottom_index();
        for (int m : mids) complete = complete && o.leq(b, m);
        rep.shape_ok = pairs && complete;
        return rep;
    }

    rep.kind = rank2_case::om_rank2;
    oriented_system uom = underlying_oriented_matroid(o);
    std::vector<sign_vec> vs;
    for (int i = 0; i < uom.size(); ++i) vs.push_back(uom.at(i).v);
    om_report om = validate_om(uom.n(), vs);
    rep.shape_ok = om.passed && uom.rank() == 2 && uom.size() == o.size();
    return rep;
}

om_report validate_om(int n, const std::vector<sign_vec>& covs) {
    om_report rep;
    mask_t full = sign_vec::low_mask(n);
    std::vector<sign_vec> set = covs;
    std::sort(set.begin(), set.end(), [n](sign_vec a, sign_vec b) {
        return sign_string_less(a, b, n);
    });
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (sign_vec v : set)
        if (v.ones()) throw error("validate_om: sign vectors must avoid the value one");
    auto find = [&](sign_vec v) {
        for (const sign_vec& w : set)
            if (w == v) return true;
        return false;
    };
    auto om_prod = [&](sign_vec a, sign_vec b) {
        mask_t za = ~(a.p | a.m);
        return sign_vec{a.p | (b.p & za), a.m | (b.m & za)};
    };

    rep.om1_ok = find(sign_vec{});
    if (!rep.om1_ok) rep.witnesses.push_back("OM1: the zero vector is missing");
    for (sign_vec v : set)
        if (!find(negate(v))) {
            rep.om2_ok = false;
            rep.witnesses.push_back("OM2: missing -" + to_string(v, n));
            break;
        }
    for (sign_vec a : set) {
        for (sign_vec b : set)
            if (!find(om_prod(a, b))) {
                rep.om3_ok = false;
                rep.witnesses.push_back("OM3: missing " + to_string(a, n) + " o " +
                                        to_string(b, n));
                break;
            }
        if (!rep.om3_ok) break;
    }
    for (sign_vec a : set) {
        for (sign_vec b : set) {
            mask_t sep = separation(a, b);
            sign_vec ab = om_prod(a, b);
            mask_t fixed = ~sep & full;
            for (int x : elements_of(sep)) {
                bool found = false;
                for (sign_vec g : set) {
                    if (g.get(x) != sign_symbol::zero) continue;
                    if ((((g.p ^ ab.p) | (g.m ^ ab.m)) & fixed) == 0) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    rep.om4_ok = false;
                    rep.witnesses.push_back("OM4: no gamma for " + to_string(a, n) + ", " +
                                            to_string(b, n) + " at " + std::to_string(x));
                    break;
                }
            }
            if (!rep.om4_ok) break;
        }
        if (!rep.om4_ok) break;
    }
    for (sign_vec v : set) rep.closed_sets.push_back(v.zeros(n));
    std::sort(rep.closed_sets.begin(), rep.closed_sets.end());
    rep.closed_sets.erase(std::unique(rep.closed_sets.begin(), rep.closed_sets.end()),
                          rep.closed_sets.end());
    rep.passed = rep.om1_ok && rep.om2_ok && rep.om3_ok && rep.om4_ok;
    return rep;
}

bool om_underlying_matches(const om_report& om, const flat_lattice& L) {
    std::vector<mask_t> xi_sets;
    for (int f = 0; f < L.size(); ++f) xi_sets.push_back(L.xi(f));
    std::sort(xi_sets.begin(), xi_sets.end());
    return xi_sets == om.closed_sets;
}

}  // namespace oig
