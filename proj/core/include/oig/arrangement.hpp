#pragma once

#include <string>
#include <vector>

#include "oig/orient.hpp"
#include "oig/rational.hpp"

namespace oig {

// Central hyperplane arrangement given by exact rational linear forms; no
// form is zero and no two are proportional.
class rational_arrangement {
  public:
    rational_arrangement(int d, std::vector<qvec> forms);

    int dimension() const { return d_; }
    int size() const { return static_cast<int>(forms_.size()); }
    const std::vector<qvec>& forms() const { return forms_; }
    const qvec& form(int e) const { return forms_[static_cast<std::size_t>(e)]; }
    bool essential() const;  // common kernel is the origin

  private:
    int d_ = 0;
    std::vector<qvec> forms_;
};

// is there an x with sign(l_e(x)) = sigma_e for all e? (characters 0 + -)
bool sign_feasible(const rational_arrangement& arr, const std::string& sigma);

// all realizable sign vectors; brute force over 3^n with a cap at n <= 10
std::vector<std::string> real_covectors(const rational_arrangement& arr);

// Covectors {(sign f(v_e))_e : f linear} of a configuration of nonzero
// vectors, with the independent-subset matroid underneath; validates as an
// oriented interval greedoid.
oriented_system om_from_vectors(const std::vector<qvec>& vectors,
                                std::vector<std::string> labels = {});

}  // namespace oig
