#include "oig/set_system.hpp"

#include <algorithm>
#include <atomic>

namespace oig {

namespace {
std::atomic<bool> g_extra_checks{false};
}

void set_extra_checks(bool on) { g_extra_checks.store(on, std::memory_order_relaxed); }
bool extra_checks() { return g_extra_checks.load(std::memory_order_relaxed); }

ground_set::ground_set(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > max_ground_size)
        throw cap_error("ground set exceeds " + std::to_string(max_ground_size) + " elements");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, fresh] = index_.emplace(labels_[static_cast<std::size_t>(i)], i);
        if (!fresh) throw error("duplicate label '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
}

int ground_set::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw error("unknown label '" + label + "'");
    return it->second;
}

std::optional<int> ground_set::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> ground_set::labels_of(mask_t m) const {
    std::vector<std::string> out;
    for (int e : elements_of(m)) out.push_back(label(e));
    return out;
}

mask_t ground_set::mask_of(const std::vector<std::string>& labels) const {
    mask_t m = 0;
    for (const auto& l : labels) m |= bit(index(l));
    return m;
}

set_system::set_system(ground_set ground, std::vector<mask_t> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    mask_t full = ground_.full();
    for (mask_t m : members_)
        if (!subset_of(m, full)) throw error("member is not a subset of the ground set");
    std::sort(members_.begin(), members_.end(), subset_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    lookup_ = members_;
    std::sort(lookup_.begin(), lookup_.end());
    for (mask_t m : members_) union_ |= m;
}

bool set_system::is_feasible(mask_t m) const {
    return std::binary_search(lookup_.begin(), lookup_.end(), m);
}

set_system build_set_system(std::vector<std::string> labels,
                            const std::vector<std::vector<std::string>>& members) {
    ground_set g(std::move(labels));
    std::vector<mask_t> masks;
    masks.reserve(members.size());
    for (const auto& member : members) masks.push_back(g.mask_of(member));
    return set_system(std::move(g), std::move(masks));
}

mask_t continuations(const set_system& sys, mask_t x) {
    if (!sys.is_feasible(x)) throw error("continuations: X is not feasible");
    mask_t g = 0;
    for (int e = 0; e < sys.size(); ++e)
        if (!contains(x, e) && sys.is_feasible(x | bit(e))) g |= bit(e);
    return g;
}

std::vector<int> feasible_ordering(const set_system& sys, mask_t x) {
    if (!sys.is_feasible(x)) throw error("feasible_ordering: X is not feasible");
    // Any feasible prefix inside x extends by (IG2) against x itself, so the
    // greedy least feasible step yields the lexicographically least ordering.
    std::vector<int> order;
    mask_t prefix = 0;
    while (prefix != x) {
        bool advanced = false;
        for (int e : elements_of(x & ~prefix)) {
            mask_t next = prefix | bit(e);
            if (!sys.is_feasible(next)) continue;
            prefix = next;
            order.push_back(e);
            advanced = true;
            break;
        }
        if (!advanced)
            throw internal_error(
                "feasible_ordering: ordering search stuck; input violates (IG1)/(IG2)");
    }
    return order;
}

std::vector<int> strong_exchange(const set_system& sys, const std::vector<int>& x_ordering,
                                 mask_t y) {
    mask_t x = mask_of(x_ordering);
    if (!sys.is_feasible(x)) throw error("strong_exchange: X is not feasible");
    if (!sys.is_feasible(y)) throw error("strong_exchange: Y is not feasible");
    if (popcount(x) <= popcount(y)) throw error("strong_exchange: requires |X| > |Y|");
    {
        mask_t prefix = 0;
        for (int e : x_ordering) {
            prefix |= bit(e);
            if (!sys.is_feasible(prefix))
                throw error("strong_exchange: X_ordering is not a feasible ordering");
        }
    }
    int k = popcount(x) - popcount(y);
    // candidates: elements of X \ Y in X-ordering order; a subset is valid
    // when its stepwise unions with Y (taken in that order) are all feasible
    std::vector<int> pool;
    for (int e : x_ordering)
        if (!contains(y, e)) pool.push_back(e);
    std::vector<int> pick;
    std::vector<std::vector<int>> valid;
    auto dfs = [&](auto&& self, std::size_t from, mask_t acc) -> void {
        if (pick.size() == static_cast<std::size_t>(k)) {
            valid.push_back(pick);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            mask_t next = acc | bit(pool[i]);
            if (!sys.is_feasible(next)) continue;
            pick.push_back(pool[i]);
            self(self, i + 1, next);
            pick.pop_back();
        }
    };
    dfs(dfs, 0, y);
    if (valid.empty())
        throw internal_error(
            "strong_exchange: no exchange subset exists; input is not an interval greedoid");
    // deterministic result: canonically least as a subset
    std::size_t best = 0;
    for (std::size_t i = 1; i < valid.size(); ++i)
        if (subset_less(mask_of(valid[i]), mask_of(valid[best]))) best = i;
    return valid[best];
}

set_system contract(const set_system& sys, mask_t x) {
    if (!sys.is_feasible(x)) throw error("contract: X is not feasible");
    std::vector<mask_t> quotient;
    mask_t used = 0;
    for (mask_t f : sys.feasible()) {
        if (!subset_of(x, f)) continue;
        quotient.push_back(f & ~x);
        used |= f & ~x;
    }
    // re-index onto the covered ground set
    std::vector<std::string> labels = sys.ground().labels_of(used);
    std::vector<int> old_of_new = elements_of(used);
    std::vector<int> new_of_old(static_cast<std::size_t>(sys.size()), -1);
    for (int i = 0; i < static_cast<int>(old_of_new.size()); ++i)
        new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(i)])] = i;
    std::vector<mask_t> members;
    members.reserve(quotient.size());
    for (mask_t q : quotient) {
        mask_t m = 0;
        for (int e : elements_of(q)) m |= bit(new_of_old[static_cast<std::size_t>(e)]);
        members.push_back(m);
    }
    return set_system(ground_set(std::move(labels)), std::move(members));
}

set_system restrict_to(const set_system& sys, mask_t w) {
    if (!subset_of(w, sys.ground().full())) throw error("restrict: W is not a subset of E");
    std::vector<std::string> labels = sys.ground().labels_of(w);
    std::vector<int> old_of_new = elements_of(w);
    std::vector<int> new_of_old(static_cast<std::size_t>(sys.size()), -1);
    for (int i = 0; i < static_cast<int>(old_of_new.size()); ++i)
        new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(i)])] = i;
    std::vector<mask_t> members;
    for (mask_t f : sys.feasible()) {
        if (!subset_of(f, w)) continue;
        mask_t m = 0;
        for (int e : elements_of(f)) m |= bit(new_of_old[static_cast<std::size_t>(e)]);
        members.push_back(m);
    }
    return set_system(ground_set(std::move(labels)), std::move(members));
}

rank_closure rank_and_closure(const set_system& sys, mask_t a) {
    if (!subset_of(a, sys.ground().full())) throw error("rank_and_closure: A is not a subset of E");
    int n = sys.size();
    if (n > 20) throw cap_error("rank_and_closure: closure scan is limited to 20 elements");
    // rank table over all subsets
    std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> rank(total, 0);
    for (mask_t s = 0; s < total; ++s) {
        std::uint8_t r = sys.is_feasible(s) ? static_cast<std::uint8_t>(popcount(s)) : 0;
        mask_t rest = s;
        while (rest) {
            mask_t b = rest & (~rest + 1);
            rest ^= b;
            r = std::max(r, rank[s ^ b]);
        }
        rank[s] = r;
    }
    mask_t full = sys.ground().full();
    // smallest closed superset along the rank closure: grow by the elements
    // that do not raise the rank until the set is closed
    mask_t closure = a;
    for (;;) {
        mask_t next = closure;
        for (int e : elements_of(full & ~closure))
            if (rank[closure | bit(e)] == rank[closure]) next |= bit(e);
        if (next == closure) break;
        closure = next;
    }
    return rank_closure{static_cast<int>(rank[a]), closure};
}

std::vector<mask_t> maximal_feasible_in(const set_system& sys, mask_t a) {
    if (!subset_of(a, sys.ground().full()))
        throw error("maximal_feasible_in: A is not a subset of E");
    std::vector<mask_t> inside;
    for (mask_t f : sys.feasible())
        if (subset_of(f, a)) inside.push_back(f);
    std::vector<mask_t> maximal;
    for (mask_t f : inside) {
        bool top = true;
        for (mask_t g : inside)
            if (f != g && subset_of(f, g)) {
                top = false;
                break;
            }
        if (top) maximal.push_back(f);
    }
    return maximal;  // inherits canonical order from feasible()
}

}  // namespace oig
