#pragma once

#include <string>
#include <vector>

#include "oig/rational.hpp"
#include "oig/set_system.hpp"

namespace oig {

struct point_configuration {
    int d = 0;
    std::vector<std::string> labels;
    std::vector<qvec> points;  // distinct, exact rational coordinates
};

// Convex geometry tau(A) = conv(A) cap E of a point configuration, with the
// complement antimatroid. Hull membership is decided exactly by rational
// feasibility of the convex-combination system, so every dimension works the
// same way; the documented supported range is d <= 3, |E| <= 14.
class convex_geometry {
  public:
    static convex_geometry build(const point_configuration& pts);

    const point_configuration& points() const { return pts_; }
    mask_t tau(mask_t a) const;  // closure
    mask_t ext(mask_t a) const;  // extreme points of A
    const set_system& antimatroid() const { return sys_; }

  private:
    point_configuration pts_;
    std::vector<mask_t> tau_;  // indexed by subset
    set_system sys_;
};

}  // namespace oig
