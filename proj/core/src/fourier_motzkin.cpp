#include "oig/fourier_motzkin.hpp"

#include <algorithm>

#include "oig/error.hpp"

namespace oig {

namespace {

bool constant_holds(const lin_constraint& c) {
    switch (c.r) {
        case rel::eq: return c.constant == 0;
        case rel::ge: return c.constant >= 0;
        case rel::gt: return c.constant > 0;
    }
    return false;
}

bool all_zero(const qvec& v) {
    for (const rational& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool fm_feasible(int nvars, std::vector<lin_constraint> cs) {
    for (const auto& c : cs)
        if (static_cast<int>(c.coeffs.size()) != nvars)
            throw error("fm_feasible: constraint arity mismatch");

    std::vector<char> eliminated(static_cast<std::size_t>(nvars), 0);
    // pivot out equalities first
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].r != rel::eq) continue;
            int v = -1;
            for (int j = 0; j < nvars; ++j)
                if (!eliminated[static_cast<std::size_t>(j)] && cs[i].coeffs[static_cast<std::size_t>(j)] != 0) {
                    v = j;
                    break;
                }
            if (v < 0) {
                if (!constant_holds(cs[i])) return false;
                cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
                again = true;
                break;
            }
            lin_constraint pivot = cs[i];
            cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
            rational pc = pivot.coeffs[static_cast<std::size_t>(v)];
            for (auto& c : cs) {
                rational f = c.coeffs[static_cast<std::size_t>(v)];
                if (f == 0) continue;
                rational scale = f / pc;
                for (int j = 0; j < nvars; ++j)
                    c.coeffs[static_cast<std::size_t>(j)] -= scale * pivot.coeffs[static_cast<std::size_t>(j)];
                c.constant -= scale * pivot.constant;
            }
            eliminated[static_cast<std::size_t>(v)] = 1;
            again = true;
            break;
        }
    }

    // Fourier-Motzkin on the remaining inequalities
    for (int v = 0; v < nvars; ++v) {
        if (eliminated[static_cast<std::size_t>(v)]) continue;
        std::vector<lin_constraint> lower, upper, rest;
        for (auto& c : cs) {
            const rational& a = c.coeffs[static_cast<std::size_t>(v)];
            if (a == 0)
                rest.push_back(std::move(c));
            else if (a > 0)
                lower.push_back(std::move(c));  // x_v > -(rest)/a
            else
                upper.push_back(std::move(c));
        }
        cs = std::move(rest);
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // positive combination cancelling x_v
                rational a = lo.coeffs[static_cast<std::size_t>(v)];
                rational b = -up.coeffs[static_cast<std::size_t>(v)];
                lin_constraint c;
                c.r = (lo.r == rel::gt || up.r == rel::gt) ? rel::gt : rel::ge;
                c.coeffs.assign(static_cast<std::size_t>(nvars), 0);
                for (int j = 0; j < nvars; ++j)
                    c.coeffs[static_cast<std::size_t>(j)] =
                        b * lo.coeffs[static_cast<std::size_t>(j)] +
                        a * up.coeffs[static_cast<std::size_t>(j)];
                c.constant = b * lo.constant + a * up.constant;
                if (all_zero(c.coeffs)) {
                    if (!constant_holds(c)) return false;
                } else {
                    cs.push_back(std::move(c));
                }
            }
    }

    for (const auto& c : cs) {
        if (!all_zero(c.coeffs))
            throw internal_error("fm_feasible: a variable survived elimination");
        if (!constant_holds(c)) return false;
    }
    return true;
}

}  // namespace oig
