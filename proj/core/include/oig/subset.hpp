#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace oig {

// Subsets of a ground set (at most 64 elements) are machine-word bit masks
// indexed by canonical element order.
using mask_t = std::uint64_t;

inline constexpr int max_ground_size = 64;

inline int popcount(mask_t m) { return std::popcount(m); }

inline bool subset_of(mask_t a, mask_t b) { return (a & ~b) == 0; }

inline mask_t bit(int e) { return mask_t{1} << e; }

inline bool contains(mask_t m, int e) { return (m >> e) & 1; }

inline std::vector<int> elements_of(mask_t m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        mask_t b = m & (~m + 1);
        out.push_back(std::countr_zero(b));
        m ^= b;
    }
    return out;
}

inline mask_t mask_of(const std::vector<int>& elems) {
    mask_t m = 0;
    for (int e : elems) m |= bit(e);
    return m;
}

// Canonical subset order: by cardinality, then lexicographic on the sorted
// index sequence. The first differing index decides, so within one size the
// set owning the smaller index comes first.
inline bool subset_less(mask_t a, mask_t b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    mask_t d = a ^ b;
    if (!d) return false;
    mask_t low = d & (~d + 1);
    return (a & low) != 0;
}

}  // namespace oig
