#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oig/set_system.hpp"

namespace oig {

enum class axiom_class { accessible, greedoid, interval_greedoid, matroid, antimatroid };

enum class axiom_id { ig1, ig2, ig3, m1, lip, uip };

std::string to_string(axiom_class c);
std::string to_string(axiom_id a);
axiom_class axiom_class_from_string(const std::string& s);

// One falsifying witness. Fields are used as the named axiom requires:
//   IG1: X            IG2: X, Y         IG3: X, Y, Z, e
//   M1:  X, Y         LIP: X, Y, e      UIP: X, Y, e
// A missing empty set (the family is empty) is reported as IG1 without X.
struct axiom_violation {
    axiom_id axiom;
    std::optional<mask_t> x, y, z;
    std::optional<int> element;
};

struct axiom_report {
    axiom_class class_checked = axiom_class::accessible;
    bool passed = false;
    std::vector<axiom_violation> violations;
};

// Exhaustive check of the requested class:
//   accessible        = nonempty family + (IG1)
//   greedoid          = (IG1) + (IG2)
//   interval_greedoid = (IG1) + (IG2) + (IG3)
//   matroid           = (M1) + (M2)       (M2 is IG2)
//   antimatroid       = greedoid + (UIP)
// By default reports the canonically first witness per axiom; with
// all_violations every witness is enumerated.
axiom_report check_axioms(const set_system& sys, axiom_class cls, bool all_violations = false);

inline bool is_interval_greedoid(const set_system& sys) {
    return check_axioms(sys, axiom_class::interval_greedoid).passed;
}

}  // namespace oig
