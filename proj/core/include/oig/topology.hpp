#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "oig/orient.hpp"
#include "oig/poset.hpp"

namespace oig {

using bigint = boost::multiprecision::cpp_int;

// the covector poset of a validated oriented system, optionally with an
// adjoined maximum; element names are the sign strings (and "1^" for the top)
finite_poset covector_poset(const oriented_system& o, bool augmented);

inline finite_poset augment(const oriented_system& o) { return covector_poset(o, true); }

// number of covectors of each support rank 1..rank (the cells of the sphere)
std::vector<int> cells_by_rank(const oriented_system& o);

// all length-2 intervals have exactly four elements
bool is_thin(const finite_poset& p, std::string* first_violation = nullptr);

// Faces listed per dimension; faces_by_dim[d] holds sorted (d+1)-element
// vertex lists, each closed family coming from chain enumeration.
struct simplicial_complex {
    int vertices = 0;
    std::vector<std::vector<std::vector<int>>> faces_by_dim;

    int dimension() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    long long face_count(int d) const {
        return d < 0 || d > dimension()
                   ? 0
                   : static_cast<long long>(faces_by_dim[static_cast<std::size_t>(d)].size());
    }
};

// chains of the proper part of a bounded poset
simplicial_complex order_complex(const finite_poset& p);

struct homology_report {
    long long euler = 0;                          // alternating face count
    std::vector<long long> face_counts;           // f_0 .. f_dim
    std::vector<long long> betti;                 // reduced Betti numbers 0..dim
    std::vector<std::vector<bigint>> torsion;     // nontrivial invariant factors per dim

    bool torsion_free() const;
    // reduced homology of S^d plus the Euler check chi = 1 + (-1)^d
    bool matches_sphere(int d) const;
};

homology_report homology_evidence(const simplicial_complex& c);

}  // namespace oig
