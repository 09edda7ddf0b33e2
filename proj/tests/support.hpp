#pragma once

#include <string>
#include <vector>

#include "oig/arrangement.hpp"
#include "oig/orient.hpp"
#include "oig/point_config.hpp"

namespace oig::testing {

// the antimatroid of three colinear points
set_system colinear_system();

// its 19-covector orientation
oriented_system colinear_oig();

// the rank-2 vector matroid on (-3,1), (2,1), (4,1)
oriented_system three_vector_om();

// the rank-1 complexified arrangement (one hyperplane in C)
oriented_system rank1_complexified();

point_configuration colinear_points();

std::vector<qvec> three_vectors();

}  // namespace oig::testing
