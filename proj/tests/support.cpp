#include "support.hpp"

#include "oig/complexified.hpp"

namespace oig::testing {

set_system colinear_system() {
    return build_set_system({"x", "y", "z"},
                            {{}, {"x"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "y", "z"}});
}

oriented_system colinear_oig() { return oig_from_antimatroid(colinear_system()); }

std::vector<qvec> three_vectors() {
    return {{rational(-3), rational(1)}, {rational(2), rational(1)}, {rational(4), rational(1)}};
}

oriented_system three_vector_om() { return om_from_vectors(three_vectors(), {"x", "y", "z"}); }

oriented_system rank1_complexified() {
    return complexified_oig(rational_arrangement(1, {{rational(1)}}));
}

point_configuration colinear_points() {
    point_configuration pts;
    pts.d = 2;
    pts.labels = {"x", "y", "z"};
    pts.points = {{rational(0), rational(0)}, {rational(1), rational(0)}, {rational(2), rational(0)}};
    return pts;
}

}  // namespace oig::testing
