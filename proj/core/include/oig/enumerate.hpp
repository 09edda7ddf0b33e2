#pragma once

#include <functional>

#include "oig/set_system.hpp"

namespace oig {

// Every interval greedoid family on the ground set {a, b, ...} of size n, by
// level DFS over accessible families with incremental (IG2)/(IG3) pruning.
// Visits each family exactly once, in a deterministic order. When cover_ground
// is set, families whose members miss an element are skipped (those are the
// smaller-ground systems padded with loops). Families larger than max_members
// are pruned. Shards partition the search by the second-level branching, so
// independent shards can run on separate threads.
void enumerate_interval_greedoids(int n, int max_members,
                                  const std::function<void(const set_system&)>& visit,
                                  bool cover_ground = true, unsigned shard_index = 0,
                                  unsigned shard_count = 1);

}  // namespace oig
