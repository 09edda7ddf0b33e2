#include "oig/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace oig {

namespace {

struct enumerator {
    int n;
    int max_members;
    bool cover_ground;
    const std::function<void(const set_system&)>& visit;
    std::vector<std::vector<mask_t>> levels;  // levels[k]: members of size k
    std::unordered_set<mask_t> in_family;
    std::vector<std::string> labels;
    int total = 1;
    unsigned shard_index = 0, shard_count = 1;
    unsigned branch_serial = 0;  // level-2 branches, round-robined over shards

    enumerator(int n_, int cap, bool cover, const std::function<void(const set_system&)>& v)
        : n(n_), max_members(cap), cover_ground(cover), visit(v) {
        for (int e = 0; e < n; ++e) labels.push_back(std::string(1, static_cast<char>('a' + e)));
        levels.push_back({0});
        in_family.insert(0);
    }

    bool ig2_ok(mask_t x, int size) const {
        // every smaller member must extend one step toward x
        for (int k = 0; k < size; ++k)
            for (mask_t y : levels[static_cast<std::size_t>(k)]) {
                bool ok = false;
                for (int e : elements_of(x & ~y))
                    if (in_family.count(y | bit(e))) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
            }
        return true;
    }

    bool ig3_ok(mask_t w) const {
        // w = z u e just added: every feasible y between a feasible x and z
        // with x u e feasible must itself extend by e
        for (int e : elements_of(w)) {
            mask_t z = w ^ bit(e);
            if (!in_family.count(z)) continue;
            // subsets x of z with x u e feasible
            mask_t x = z;
            while (true) {
                if (in_family.count(x) && in_family.count(x | bit(e))) {
                    mask_t d = z & ~x;
                    mask_t t = d;
                    while (true) {
                        mask_t y = x | t;
                        if (in_family.count(y) && !in_family.count(y | bit(e))) return false;
                        if (t == 0) break;
                        t = (t - 1) & d;
                    }
                }
                if (x == 0) break;
                x = (x - 1) & z;
            }
        }
        return true;
    }

    void emit(int completed_level) {
        // families finished before the sharded level belong to shard 0
        if (completed_level < 1 && shard_count > 1 && shard_index != 0) return;
        if (cover_ground) {
            mask_t u = 0;
            for (const auto& level : levels)
                for (mask_t m : level) u |= m;
            mask_t full = n >= 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
            if (u != full) return;
        }
        std::vector<mask_t> members;
        for (const auto& level : levels)
            for (mask_t m : level) members.push_back(m);
        visit(set_system(ground_set(labels), std::move(members)));
    }

    void dfs(int level) {
        std::vector<mask_t> cands;
        for (mask_t x : levels[static_cast<std::size_t>(level)])
            for (int e = 0; e < n; ++e)
                if (!contains(x, e)) cands.push_back(x | bit(e));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        int k = static_cast<int>(cands.size());
        if (k > 24) throw cap_error("enumerate_interval_greedoids: level fan-out too large");
        for (mask_t choice = 0; choice < (mask_t{1} << k); ++choice) {
            if (level == 1 && shard_count > 1 && (branch_serial++ % shard_count) != shard_index)
                continue;
            std::vector<mask_t> chosen;
            for (int i = 0; i < k; ++i)
                if (contains(choice, i)) chosen.push_back(cands[static_cast<std::size_t>(i)]);
            if (total + static_cast<int>(chosen.size()) > max_members) continue;
            levels.push_back(chosen);
            for (mask_t m : chosen) in_family.insert(m);
            total += static_cast<int>(chosen.size());
            bool ok = true;
            for (mask_t m : chosen)
                if (!ig2_ok(m, level + 1)) {
                    ok = false;
                    break;
                }
            if (ok)
                for (mask_t m : chosen)
                    if (!ig3_ok(m)) {
                        ok = false;
                        break;
                    }
            if (ok) {
                if (!chosen.empty() && level + 1 < n)
                    dfs(level + 1);
                else
                    emit(level);
            }
            total -= static_cast<int>(chosen.size());
            for (mask_t m : chosen) in_family.erase(m);
            levels.pop_back();
        }
    }
};

}  // namespace

void enumerate_interval_greedoids(int n, int max_members,
                                  const std::function<void(const set_system&)>& visit,
                                  bool cover_ground, unsigned shard_index, unsigned shard_count) {
    if (n < 0 || n > 16) throw error("enumerate_interval_greedoids: n out of range");
    if (shard_count == 0 || shard_index >= shard_count)
        throw error("enumerate_interval_greedoids: bad shard");
    enumerator e(n, max_members, cover_ground, visit);
    e.shard_index = shard_index;
    e.shard_count = shard_count;
    e.dfs(0);
}

}  // namespace oig
