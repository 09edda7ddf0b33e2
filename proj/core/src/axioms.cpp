#include "oig/axioms.hpp"

namespace oig {

std::string to_string(axiom_class c) {
    switch (c) {
        case axiom_class::accessible: return "accessible";
        case axiom_class::greedoid: return "greedoid";
        case axiom_class::interval_greedoid: return "interval_greedoid";
        case axiom_class::matroid: return "matroid";
        case axiom_class::antimatroid: return "antimatroid";
    }
    return "?";
}

std::string to_string(axiom_id a) {
    switch (a) {
        case axiom_id::ig1: return "IG1";
        case axiom_id::ig2: return "IG2";
        case axiom_id::ig3: return "IG3";
        case axiom_id::m1: return "M1";
        case axiom_id::lip: return "LIP";
        case axiom_id::uip: return "UIP";
    }
    return "?";
}

axiom_class axiom_class_from_string(const std::string& s) {
    if (s == "accessible") return axiom_class::accessible;
    if (s == "greedoid") return axiom_class::greedoid;
    if (s == "interval_greedoid") return axiom_class::interval_greedoid;
    if (s == "matroid") return axiom_class::matroid;
    if (s == "antimatroid") return axiom_class::antimatroid;
    throw error("unknown axiom class '" + s + "'");
}

namespace {

// every check walks members in canonical order, so the first witness found is
// the canonically first one
class checker {
  public:
    checker(const set_system& sys, bool all) : sys_(sys), all_(all) {}

    bool add(axiom_violation v) {
        report_.push_back(std::move(v));
        return all_;  // false = stop after the first witness of this axiom
    }

    void ig1() {
        if (sys_.feasible().empty()) {
            report_.push_back({axiom_id::ig1, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
            return;
        }
        for (mask_t x : sys_.feasible()) {
            if (x == 0) continue;
            bool ok = false;
            for (int e : elements_of(x))
                if (sys_.is_feasible(x ^ bit(e))) {
                    ok = true;
                    break;
                }
            if (!ok && !add({axiom_id::ig1, x, std::nullopt, std::nullopt, std::nullopt})) return;
        }
    }

    void ig2() {
        for (mask_t x : sys_.feasible())
            for (mask_t y : sys_.feasible()) {
                if (popcount(x) <= popcount(y)) continue;
                bool ok = false;
                for (int e : elements_of(x & ~y))
                    if (sys_.is_feasible(y | bit(e))) {
                        ok = true;
                        break;
                    }
                if (!ok && !add({axiom_id::ig2, x, y, std::nullopt, std::nullopt})) return;
            }
    }

    void ig3() {
        for (mask_t x : sys_.feasible())
            for (mask_t z : sys_.feasible()) {
                if (!subset_of(x, z)) continue;
                for (int e = 0; e < sys_.size(); ++e) {
                    if (contains(z, e)) continue;
                    if (!sys_.is_feasible(x | bit(e)) || !sys_.is_feasible(z | bit(e))) continue;
                    for (mask_t y : sys_.feasible()) {
                        if (!subset_of(x, y) || !subset_of(y, z)) continue;
                        if (!sys_.is_feasible(y | bit(e)))
                            if (!add({axiom_id::ig3, x, y, z, e})) return;
                    }
                }
            }
    }

    void m1() {
        for (mask_t x : sys_.feasible()) {
            // walk proper subsets of x
            mask_t s = x;
            while (s) {
                s = (s - 1) & x;
                if (!sys_.is_feasible(s)) {
                    if (!add({axiom_id::m1, x, s, std::nullopt, std::nullopt})) return;
                }
                if (s == 0) break;
            }
        }
    }

    void uip() {
        for (mask_t x : sys_.feasible())
            for (mask_t y : sys_.feasible()) {
                if (x == y || !subset_of(x, y)) continue;
                for (int e = 0; e < sys_.size(); ++e) {
                    if (contains(y, e)) continue;
                    if (sys_.is_feasible(x | bit(e)) && !sys_.is_feasible(y | bit(e)))
                        if (!add({axiom_id::uip, x, y, std::nullopt, e})) return;
                }
            }
    }

    std::vector<axiom_violation> take() { return std::move(report_); }

  private:
    const set_system& sys_;
    bool all_;
    std::vector<axiom_violation> report_;
};

}  // namespace

axiom_report check_axioms(const set_system& sys, axiom_class cls, bool all_violations) {
    checker c(sys, all_violations);
    switch (cls) {
        case axiom_class::accessible: c.ig1(); break;
        case axiom_class::greedoid:
            c.ig1();
            c.ig2();
            break;
        case axiom_class::interval_greedoid:
            c.ig1();
            c.ig2();
            c.ig3();
            break;
        case axiom_class::matroid:
            c.m1();
            c.ig2();
            break;
        case axiom_class::antimatroid:
            c.ig1();
            c.ig2();
            c.uip();
            break;
    }
    axiom_report r;
    r.class_checked = cls;
    r.violations = c.take();
    r.passed = r.violations.empty();
    return r;
}

}  // namespace oig
