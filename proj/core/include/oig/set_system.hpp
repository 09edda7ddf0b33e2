#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oig/error.hpp"
#include "oig/subset.hpp"

namespace oig {

// Ordered ground set; the position of a label is its canonical element index.
class ground_set {
  public:
    ground_set() = default;
    explicit ground_set(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
    int index(const std::string& label) const;           // throws on unknown label
    std::optional<int> find(const std::string& label) const;
    mask_t full() const { return size() == 64 ? ~mask_t{0} : (mask_t{1} << size()) - 1; }

    std::vector<std::string> labels_of(mask_t m) const;  // canonical order
    mask_t mask_of(const std::vector<std::string>& labels) const;

    friend bool operator==(const ground_set&, const ground_set&) = default;

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

// A finite set system: ground set plus a deduplicated family of subsets,
// stored in canonical (cardinality, lexicographic) order.
class set_system {
  public:
    set_system() = default;
    set_system(ground_set ground, std::vector<mask_t> members);

    const ground_set& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    const std::vector<mask_t>& feasible() const { return members_; }
    bool is_feasible(mask_t m) const;
    mask_t union_of_members() const { return union_; }
    int rank() const { return members_.empty() ? 0 : popcount(members_.back()); }

    friend bool operator==(const set_system&, const set_system&) = default;

  private:
    ground_set ground_;
    std::vector<mask_t> members_;         // canonical order
    std::vector<mask_t> lookup_;          // sorted by raw mask, for membership tests
    mask_t union_ = 0;
};

set_system build_set_system(std::vector<std::string> labels,
                            const std::vector<std::vector<std::string>>& members);

// Gamma(X): elements extending the feasible set X to another feasible set.
mask_t continuations(const set_system& sys, mask_t x);

// Lexicographically least ordering of X whose prefixes are all feasible.
std::vector<int> feasible_ordering(const set_system& sys, mask_t x);

// Ordered subset of X \ Y of size |X|-|Y| whose stepwise unions with Y stay
// feasible, increasing along the given feasible ordering of X.
std::vector<int> strong_exchange(const set_system& sys, const std::vector<int>& x_ordering,
                                 mask_t y);

// F/X over the ground set covered by its members.
set_system contract(const set_system& sys, mask_t x);

// Members contained in W, over ground set W.
set_system restrict_to(const set_system& sys, mask_t w);

struct rank_closure {
    int rank = 0;
    mask_t closure = 0;
};

// rank = size of a maximal feasible subset of A; closure = intersection of
// all closed supersets of A. Requires |E| <= 20 (full 2^n rank table).
rank_closure rank_and_closure(const set_system& sys, mask_t a);

// All inclusion-maximal feasible subsets of A, in canonical order.
std::vector<mask_t> maximal_feasible_in(const set_system& sys, mask_t a);

// Cross-checks normally reserved for debugging: enables the redundant
// second-route verifications (existential flat order, covector order
// characterizations, ...). Off by default; heavy on large inputs.
void set_extra_checks(bool on);
bool extra_checks();

}  // namespace oig
