#pragma once

#include <vector>

#include "oig/orient.hpp"

namespace oig {

// Möbius function of the lattice of flats
long long mobius_flats(const flat_lattice& L, int a, int b);

struct flag_count_result {
    long long observed = 0;   // covector chains with the given support chain
    long long predicted = 0;  // the Möbius product formula
};

// chain = flat ids, strictly descending, ending at the bottom flat
flag_count_result flag_count(const oriented_system& o, const std::vector<int>& chain);

// every strictly descending flat chain ending at the bottom, nonempty
std::vector<std::vector<int>> descending_flat_chains(const flat_lattice& L);

// The coatom-generated subposet of Phi against the lattice of flats of the
// underlying oriented matroid: image, order embedding, meets, and the two
// Möbius identities driving the tope count.
struct embedding_report {
    bool ok = false;
    std::string violation;
    std::vector<int> image;                // flats of Phi expressible as meets of coatoms
    long long tope_count_full = 0;         // sum over Phi of |mu(B, 1-hat)|
    long long tope_count_restricted = 0;   // the same sum over the image lattice
};
embedding_report underlying_flat_embedding_checks(const oriented_system& o);

}  // namespace oig
