#pragma once

#include <optional>
#include <vector>

#include "oig/flats.hpp"
#include "oig/sign_vec.hpp"

namespace oig {

// Covector of a signed flat: zero on xi(A), the assignment on Gamma(A), one
// elsewhere. The support flat is recoverable from the zero set.
struct covector {
    sign_vec v;
    int support = -1;

    friend bool operator==(const covector&, const covector&) = default;
};

// assignment Gamma(flat) -> {plus, minus} as a partition of gamma
struct signed_flat {
    int flat = -1;
    mask_t plus = 0, minus = 0;
};

covector covector_of(const flat_lattice& L, const signed_flat& sf);

// support of a syntactically valid covector, nullopt otherwise
std::optional<int> support_of(const flat_lattice& L, sign_vec v);

covector covector_from_signs(const flat_lattice& L, sign_vec v);  // throws if not a covector

inline covector negate(const flat_lattice&, const covector& c) {
    return covector{negate(c.v), c.support};
}

// (a o b): star on Gamma(A v B) u xi(A v B), one elsewhere
covector circ(const flat_lattice& L, const covector& a, const covector& b);

// componentwise diamond comparison; with extra checks enabled the signed-flat
// definition and the a o b = b characterization are asserted to agree
bool cov_leq(const flat_lattice& L, const covector& a, const covector& b);

// all sign assignments over every flat; refuses when some |Gamma(A)| > 20
std::vector<covector> all_covectors(const flat_lattice& L);

std::size_t covector_count(const flat_lattice& L);  // sum over flats of 2^|Gamma|

}  // namespace oig
