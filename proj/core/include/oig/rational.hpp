#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace oig {

using rational = boost::multiprecision::cpp_rational;
using qvec = std::vector<rational>;
using qmat = std::vector<qvec>;

inline int sgn(const rational& x) { return x.sign(); }

// reduced row echelon form with zero rows dropped; canonical for a row space
qmat rref(qmat m);

int rank_of(const qmat& m);

// is v in the row space of the reduced matrix?
bool in_row_space(const qmat& reduced, const qvec& v);

// are all rows of b inside the row space of the reduced matrix a?
bool rowspace_contains(const qmat& reduced_a, const qmat& b);

}  // namespace oig
