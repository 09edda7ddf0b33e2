#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "oig/error.hpp"
#include "oig/subset.hpp"

namespace oig {

// The four sign symbols under the diamond order: zero < plus < one and
// zero < minus < one, with plus and minus incomparable.
enum class sign_symbol : std::uint8_t { zero = 0, plus = 1, minus = 2, one = 3 };

inline char to_char(sign_symbol s) { return "0+-1"[static_cast<int>(s)]; }

inline sign_symbol sign_from_char(char c) {
    switch (c) {
        case '0': return sign_symbol::zero;
        case '+': return sign_symbol::plus;
        case '-': return sign_symbol::minus;
        case '1': return sign_symbol::one;
    }
    throw error(std::string("invalid sign character '") + c + "'");
}

inline bool sign_leq(sign_symbol a, sign_symbol b) {
    auto ia = static_cast<unsigned>(a), ib = static_cast<unsigned>(b);
    return (ia & ~ib) == 0;  // the diamond is the product order on the two bits
}

inline sign_symbol sign_negate(sign_symbol s) {
    switch (s) {
        case sign_symbol::plus: return sign_symbol::minus;
        case sign_symbol::minus: return sign_symbol::plus;
        default: return s;
    }
}

// Sign sequence over up to 64 elements, two bits per element: bit in `p` for
// plus, bit in `m` for minus, both for one, neither for zero. The diamond
// order, star product and separation sets become word operations.
struct sign_vec {
    mask_t p = 0, m = 0;

    sign_symbol get(int e) const {
        return static_cast<sign_symbol>(((p >> e) & 1) | (((m >> e) & 1) << 1));
    }
    void set(int e, sign_symbol s) {
        auto v = static_cast<unsigned>(s);
        p = (p & ~bit(e)) | (static_cast<mask_t>(v & 1) << e);
        m = (m & ~bit(e)) | (static_cast<mask_t>((v >> 1) & 1) << e);
    }
    mask_t zeros(int n) const { return ~(p | m) & low_mask(n); }
    mask_t ones() const { return p & m; }
    mask_t pm() const { return p ^ m; }  // strictly signed positions

    friend bool operator==(const sign_vec&, const sign_vec&) = default;

    static mask_t low_mask(int n) { return n >= 64 ? ~mask_t{0} : (mask_t{1} << n) - 1; }
};

inline sign_vec negate(sign_vec a) { return sign_vec{a.m, a.p}; }

// componentwise diamond comparison
inline bool sign_leq_all(sign_vec a, sign_vec b) {
    return ((a.p & ~b.p) | (a.m & ~b.m)) == 0;
}

// (a * b)(e) = b(e) if b(e) > a(e), else a(e)
inline sign_vec star(sign_vec a, sign_vec b) {
    mask_t ge = ~((a.p & ~b.p) | (a.m & ~b.m));  // positions with a(e) <= b(e)
    mask_t gt = ge & ((a.p ^ b.p) | (a.m ^ b.m));
    return sign_vec{(b.p & gt) | (a.p & ~gt), (b.m & gt) | (a.m & ~gt)};
}

// positions where a and b carry opposite strict signs
inline mask_t separation(sign_vec a, sign_vec b) {
    mask_t ap = a.p & ~a.m, am = a.m & ~a.p;
    mask_t bp = b.p & ~b.m, bm = b.m & ~b.p;
    return (ap & bm) | (am & bp);
}

std::string to_string(sign_vec v, int n);
sign_vec sign_vec_from_string(const std::string& s);

// canonical order: byte order of the sign strings ('+' < '-' < '0' < '1')
bool sign_string_less(sign_vec a, sign_vec b, int n);

struct sign_vec_hash {
    std::size_t operator()(const sign_vec& v) const {
        std::size_t h = std::hash<mask_t>{}(v.p);
        return h ^ (std::hash<mask_t>{}(v.m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

}  // namespace oig
