#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "oig/covector.hpp"

namespace oig {

// Validation outcome for (OG1)-(OG4), with falsifying witnesses:
// the flat missing a support (OG1), a covector whose negation is absent
// (OG2), a pair whose product is absent (OG3), and a triple (alpha, beta, x)
// admitting no eliminating gamma (OG4).
struct orientation_report {
    bool passed = false;
    std::vector<std::string> non_covectors;
    std::vector<int> og1_missing_flats;
    std::vector<std::string> og2_missing_negations;
    std::vector<std::array<std::string, 3>> og3_missing_products;  // a, b, a o b
    struct og4_witness {
        std::string a, b;
        int x = -1;
    };
    std::vector<og4_witness> og4_failures;
    bool og1_ok() const { return og1_missing_flats.empty(); }
    bool og2_ok() const { return og2_missing_negations.empty(); }
    bool og3_ok() const { return og3_missing_products.empty(); }
    bool og4_ok() const { return og4_failures.empty(); }
};

// An interval greedoid together with a covector set and its (OG1)-(OG4)
// validation report. Immutable once built.
class oriented_system {
  public:
    static oriented_system validate(const set_system& sys, const std::vector<std::string>& covs,
                                    bool all_witnesses = false);
    static oriented_system validate(flat_lattice lat, const std::vector<sign_vec>& covs,
                                    bool all_witnesses = false);
    // skips the OG checks; for constructions whose validity is a theorem
    static oriented_system trusted(flat_lattice lat, std::vector<covector> covs);

    const flat_lattice& lattice() const { return lat_; }
    const set_system& system() const { return lat_.system(); }
    const orientation_report& report() const { return rep_; }
    bool passed() const { return rep_.passed; }

    int n() const { return lat_.system().size(); }
    int size() const { return static_cast<int>(covs_.size()); }
    const std::vector<covector>& covectors() const { return covs_; }
    const covector& at(int i) const { return covs_[static_cast<std::size_t>(i)]; }
    int find(const sign_vec& v) const;  // -1 when absent
    std::string str(int i) const { return to_string(at(i).v, n()); }
    std::vector<std::string> strings() const;

    bool leq(int i, int j) const { return sign_leq_all(at(i).v, at(j).v); }
    int rank_of(int i) const { return lat_.rank_of(at(i).support); }
    int rank() const { return lat_.rank(); }
    const std::vector<int>& topes() const { return topes_; }
    int bottom_index() const;  // the unique covector with support 0-hat

    // lower covers in the covector order, via the support grading
    std::vector<std::vector<int>> lower_cover_lists() const;

  private:
    flat_lattice lat_;
    std::vector<covector> covs_;
    std::unordered_map<sign_vec, int, sign_vec_hash> index_;
    orientation_report rep_;
    std::vector<int> topes_;

    void finish();  // sort, index, topes
};

// the unique orientation of an antimatroid: all covectors
oriented_system oig_from_antimatroid(const set_system& sys);

// covectors {con_X(alpha) : supp(alpha) <= [X]} over the contraction;
// verifies the product-preserving bijection onto the result
struct oig_contraction {
    oriented_system contracted;
    std::vector<int> image;     // original covector index -> contracted index, -1 outside the domain
    std::vector<int> preimage;  // contracted covector index -> original index
};
oig_contraction contract_oig_with_map(const oriented_system& o, mask_t x);
oriented_system contract_oig(const oriented_system& o, mask_t x);

struct restriction_result {
    oriented_system restricted;
    bool hypothesis_holds = false;  // res_W(alpha) == alpha|_W for every alpha
};
// res_W images of every covector; a full oriented interval greedoid when the
// hypothesis holds, otherwise only (OG1)-(OG3) are guaranteed
restriction_result restrict_oig(const oriented_system& o, mask_t w);

// restriction to xi([X]); always a full oriented interval greedoid, and the
// semigroup isomorphism onto {beta : beta >= alpha} is verified
oriented_system restrict_to_xi(const oriented_system& o, mask_t x);

// restriction to Gamma(emptyset); an oriented matroid
oriented_system underlying_oriented_matroid(const oriented_system& o);

covector oig_bottom(const oriented_system& o);

// every eliminating covector for the (OG4) instance (a, b, x): gamma in the
// system with gamma(x) = 0 agreeing with a o b = b o a outside S(a, b)
// wherever the product is not one; sorted canonically. The axiom only asks
// for existence, so the list may hold several witnesses.
std::vector<covector> og4_witnesses(const oriented_system& o, const covector& a,
                                    const covector& b, int x);

// A rank-2 system is either the covector semigroup of a rank-2 oriented
// matroid or, when the lattice of flats has a single coatom, the special
// five-element poset (bottom, a negation pair of subtopes, a negation pair
// of topes). The classifier names the case and checks the Hasse shape.
enum class rank2_case { om_rank2, single_coatom_five };
struct rank2_report {
    rank2_case kind = rank2_case::om_rank2;
    bool shape_ok = false;
};
rank2_report classify_rank2(const oriented_system& o);

// delta <. b agreeing with b outside S(a, b) wherever b is not one;
// requires supp(a) <= supp(b) and a not<= b; lexicographically least
covector drop_witness(const oriented_system& o, const covector& a, const covector& b);

// Oriented matroid covector axioms (OM1)-(OM4) over sign vectors without
// ones; closed_sets collects the zero sets (the underlying matroid data).
struct om_report {
    bool passed = false;
    bool om1_ok = false, om2_ok = true, om3_ok = true, om4_ok = true;
    std::vector<std::string> witnesses;
    std::vector<mask_t> closed_sets;
};
om_report validate_om(int n, const std::vector<sign_vec>& covs);

// do the OM zero sets coincide with the xi image of the lattice of flats?
bool om_underlying_matches(const om_report& om, const flat_lattice& L);

}  // namespace oig
