#pragma once

#include "oig/arrangement.hpp"
#include "oig/flats.hpp"
#include "oig/orient.hpp"

namespace oig {

// Complexified arrangement data: the intersection lattice of the subspaces
// H_e (both parts of l_e vanish) and H_e^Re (the imaginary part vanishes)
// inside R^{2d}, the interval greedoid of cover chains, and the isomorphism
// onto the lattice. Ground labels are H0..H{n-1} then H0re..H{n-1}re.
struct complexified_system {
    finite_poset lattice;              // intersections ordered by inclusion
    std::vector<int> ground_elements;  // lattice ids of E_A in canonical order
    set_system sys;
    std::vector<int> flat_to_subspace;  // flat id -> lattice element
};

complexified_system complexified_ig(const rational_arrangement& arr);

// Covectors alpha_z enumerated combinatorially from pairs of real faces: the
// imaginary-part face v fixes alpha(H_e^Re), and a face u of the
// subarrangement where v vanishes fixes alpha(H_e) on those positions.
//
// This enumeration is complete: writing z = x + iy with x, y independent real
// points, l_e(z) = l_e(x) + i l_e(y), so alpha_z is determined by the sign
// vector of y over all forms together with the sign vector of x over the
// forms whose imaginary part vanishes — and conversely any such pair of
// realizable faces is realized by some z. Sampling points could never certify
// that the covector set is closed.
oriented_system complexified_oig(const rational_arrangement& arr);

}  // namespace oig
