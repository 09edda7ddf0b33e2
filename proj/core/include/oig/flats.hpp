#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "oig/axioms.hpp"
#include "oig/poset.hpp"
#include "oig/set_system.hpp"

namespace oig {

// Equivalence class of feasible sets with equal contractions (equivalently,
// equal continuation sets).
struct flat {
    std::vector<mask_t> members;  // canonical order
    mask_t gamma = 0;             // common continuation set
    mask_t xi = 0;                // union of the class
    int corank = 0;               // common cardinality of the members
};

// The lattice Phi of flats of an interval greedoid, ordered so that
// Y subset X implies [X] <= [Y]; top is [emptyset], bottom the class of the
// maximal feasible sets. The order is computed through xi
// (A <= B iff xi(B) subset xi(A)); with extra checks enabled the existential
// definition is verified against it.
class flat_lattice {
  public:
    // Validates the interval greedoid axioms and the lattice invariants;
    // trusted_input skips both for callers that already know the system is an
    // interval greedoid (covers are then derived from the corank grading).
    static flat_lattice build(const set_system& sys, bool trusted_input = false);

    const set_system& system() const { return sys_; }
    int size() const { return static_cast<int>(flats_.size()); }
    const flat& at(int f) const { return flats_[static_cast<std::size_t>(f)]; }
    mask_t xi(int f) const { return flats_[static_cast<std::size_t>(f)].xi; }
    mask_t gamma(int f) const { return flats_[static_cast<std::size_t>(f)].gamma; }
    int corank(int f) const { return flats_[static_cast<std::size_t>(f)].corank; }
    int rank_of(int f) const { return rank_ - corank(f); }
    int rank() const { return rank_; }
    int top() const { return top_; }
    int bottom() const { return bottom_; }

    bool leq(int a, int b) const { return subset_of(xi(b), xi(a)); }
    int join(int a, int b) const { return tab(join_, a, b); }
    int meet(int a, int b) const {
        return meet_.empty() ? mu(xi(a) | xi(b)) : tab(meet_, a, b);
    }

    int mu(mask_t subset) const;           // flat of a maximal feasible subset
    int flat_of(mask_t feasible) const;    // flat containing a feasible set
    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

    finite_poset poset() const;            // element names are the flat ids

  private:
    void verify() const;

    int tab(const std::vector<int>& t, int a, int b) const {
        return t[static_cast<std::size_t>(a) * static_cast<std::size_t>(flats_.size()) +
                 static_cast<std::size_t>(b)];
    }

    set_system sys_;
    std::vector<flat> flats_;
    std::vector<int> join_, meet_;
    std::vector<std::pair<int, int>> covers_;  // (lower, upper)
    std::unordered_map<mask_t, int> flat_by_member_;
    int top_ = -1, bottom_ = -1, rank_ = 0;
};

// compares subsets as sorted index sequences, lexicographically
bool xi_lex_less(mask_t a, mask_t b);

// Interval greedoid built from a finite lower semimodular lattice: the ground
// set is the meet-irreducibles and the feasible sets are those admitting an
// ordering whose running meets step down one cover at a time from the top.
struct semimodular_ig {
    set_system sys;
    std::vector<int> flat_to_element;  // flat id of flat_lattice::build(sys) -> lattice element
};
semimodular_ig ig_from_semimodular_lattice(const finite_poset& lattice);

}  // namespace oig
