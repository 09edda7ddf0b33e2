#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oig/error.hpp"

namespace oig {

// Finite poset given by its cover relation; the order is the reflexive
// transitive closure. Element names are opaque keys.
class finite_poset {
  public:
    finite_poset() = default;
    static finite_poset from_covers(std::vector<std::string> names,
                                    std::vector<std::pair<int, int>> covers /* lower, upper */);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int index(const std::string& name) const;

    bool leq(int a, int b) const {
        return (up_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b >> 6)] >> (b & 63)) & 1;
    }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
    const std::vector<int>& upper_covers(int a) const { return up_adj_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& lower_covers(int a) const { return down_adj_[static_cast<std::size_t>(a)]; }

    std::optional<int> bottom() const;
    std::optional<int> top() const;
    bool bounded() const { return bottom().has_value() && top().has_value(); }

    // rank function from the bottom when the poset is graded (every cover
    // raises rank by exactly one); nullopt otherwise
    std::optional<std::vector<int>> ranks() const;

    bool is_lattice(std::string* why = nullptr) const;
    int join(int a, int b) const;  // throws if no unique least upper bound
    int meet(int a, int b) const;

    // x <. z and y <. z imply x^y <. x and x^y <. y
    bool lower_semimodular(std::string* why = nullptr) const;

    // elements besides the top with a unique upper cover
    std::vector<int> meet_irreducibles() const;

    long long mobius(int x, int y) const;  // requires x <= y

    std::vector<int> elements_between(int x, int y) const;  // the interval [x, y]

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_adj_, down_adj_;
    std::vector<std::vector<std::uint64_t>> up_;  // row a: bitset of {b : a <= b}
};

}  // namespace oig
