#pragma once

#include "oig/rational.hpp"

namespace oig {

enum class rel { eq, ge, gt };

// coeffs . x + constant  (rel)  0
struct lin_constraint {
    qvec coeffs;
    rational constant = 0;
    rel r = rel::eq;
};

// Exact feasibility over the rationals by Gaussian pivoting on the equalities
// followed by Fourier-Motzkin elimination on the inequalities. Strict
// feasibility over Q coincides with strict feasibility over R for rational
// data.
bool fm_feasible(int nvars, std::vector<lin_constraint> cs);

}  // namespace oig
