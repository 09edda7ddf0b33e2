#pragma once

#include <string>
#include <vector>

#include "oig/orient.hpp"
#include "oig/poset.hpp"

namespace oig {

// Topes are the covectors with support [emptyset]; a subtope is a covector
// covered by some tope; two topes are adjacent when they share a subtope.
struct tope_graph_t {
    std::vector<int> topes;                    // covector indices
    std::vector<std::pair<int, int>> edges;    // positions into topes
};

// builds the graph and checks it against the tope graph of the underlying
// oriented matroid through the restriction bijection
tope_graph_t tope_graph(const oriented_system& o);

// Topes ordered by containment of separation sets from the base; the base is
// the minimum, its negative the maximum, and the Hasse diagram is an
// orientation of the tope graph (checked).
struct tope_poset_t {
    std::vector<int> topes;   // covector indices, aligned with poset elements
    finite_poset poset;       // element names are the tope sign strings
    int base = -1;            // position into topes
};

tope_poset_t tope_poset(const oriented_system& o, int base_tope /* covector index */);

}  // namespace oig
