#pragma once

#include <string>
#include <vector>

#include "oig/orient.hpp"
#include "oig/poset.hpp"
#include "oig/topes.hpp"

namespace oig {

// Ordering tree for a recursive coatom ordering of a bounded graded poset:
// each node covers an interval [0-hat, top] and lists that interval's coatoms
// in order, each carrying the sub-ordering of its own interval. Intervals of
// rank one are leaves.
struct rco_node {
    int top = -1;
    std::vector<int> coatoms;
    std::vector<rco_node> children;
};

// Conditions (i) and (ii) of the definition, checked at every node. The poset
// must be bounded and graded; node element ids refer to p.
struct rco_check {
    bool ok = false;
    std::string violation;
};
rco_check verify_rco(const finite_poset& p, const rco_node& root);

// Builds the ordering for the augmented covector poset: the given linear
// extension of the tope poset at the root, and below each tope a coatom order
// compatible with a deterministically chosen gallery. Element ids refer to
// covector_poset(o, true), with o.size() as the adjoined maximum. The result
// is verified before it is returned.
rco_node recursive_coatom_ordering(const oriented_system& o, int base_tope,
                                   const std::vector<int>& ext /* tope covector ids */);

// linear extension of tope_poset(o, base) by (separation size, sign string)
std::vector<int> default_tope_extension(const oriented_system& o, int base_tope);

}  // namespace oig
