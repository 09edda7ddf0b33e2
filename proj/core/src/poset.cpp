#include "oig/poset.hpp"

#include <algorithm>
#include <map>

namespace oig {

finite_poset finite_poset::from_covers(std::vector<std::string> names,
                                       std::vector<std::pair<int, int>> covers) {
    finite_poset p;
    p.names_ = std::move(names);
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = p.index_.emplace(p.names_[static_cast<std::size_t>(i)], i);
        if (!fresh) throw error("finite_poset: duplicate element name '" + p.names_[static_cast<std::size_t>(i)] + "'");
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    p.covers_ = covers;
    p.up_adj_.assign(static_cast<std::size_t>(n), {});
    p.down_adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
            throw error("finite_poset: bad cover pair");
        p.up_adj_[static_cast<std::size_t>(lo)].push_back(hi);
        p.down_adj_[static_cast<std::size_t>(hi)].push_back(lo);
    }
    // transitive closure over a topological order; cycles leave vertices
    // unprocessed and are rejected
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [lo, hi] : covers) indeg[static_cast<std::size_t>(lo)]++;  // edges point downward for this pass
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k) {
        int v = order[k];
        for (int w : p.down_adj_[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) order.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) throw error("finite_poset: cover relation has a cycle");
    std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    p.up_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
    // `order` lists every element after all its upper covers, so one forward
    // pass accumulates up-sets: up(v) = {v} + union of up(upper covers)
    for (int v : order) {
        auto& row = p.up_[static_cast<std::size_t>(v)];
        row[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
        for (int w : p.up_adj_[static_cast<std::size_t>(v)])
            for (std::size_t i = 0; i < words; ++i) row[i] |= p.up_[static_cast<std::size_t>(w)][i];
    }
    // reject redundant covers (a "cover" with an intermediate element)
    for (auto [lo, hi] : covers)
        for (int mid = 0; mid < n; ++mid)
            if (mid != lo && mid != hi && p.leq(lo, mid) && p.leq(mid, hi))
                throw error("finite_poset: pair (" + p.names_[static_cast<std::size_t>(lo)] + ", " +
                            p.names_[static_cast<std::size_t>(hi)] + ") is not a cover");
    return p;
}

int finite_poset::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw error("finite_poset: unknown element '" + name + "'");
    return it->second;
}

std::optional<int> finite_poset::bottom() const {
    std::optional<int> bot;
    for (int i = 0; i < size(); ++i)
        if (down_adj_[static_cast<std::size_t>(i)].empty()) {
            if (bot) return std::nullopt;
            bot = i;
        }
    if (bot && size() > 1 && up_adj_[static_cast<std::size_t>(*bot)].empty()) return std::nullopt;
    return bot;
}

std::optional<int> finite_poset::top() const {
    std::optional<int> top;
    for (int i = 0; i < size(); ++i)
        if (up_adj_[static_cast<std::size_t>(i)].empty()) {
            if (top) return std::nullopt;
            top = i;
        }
    if (top && size() > 1 && down_adj_[static_cast<std::size_t>(*top)].empty()) return std::nullopt;
    return top;
}

std::optional<std::vector<int>> finite_poset::ranks() const {
    auto bot = bottom();
    if (!bot) return std::nullopt;
    std::vector<int> rank(static_cast<std::size_t>(size()), -1);
    rank[static_cast<std::size_t>(*bot)] = 0;
    // longest path from bottom; graded iff every cover then steps by one
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [lo, hi] : covers_) {
            if (rank[static_cast<std::size_t>(lo)] < 0) continue;
            int r = rank[static_cast<std::size_t>(lo)] + 1;
            if (r > rank[static_cast<std::size_t>(hi)]) {
                rank[static_cast<std::size_t>(hi)] = r;
                changed = true;
            }
        }
    }
    for (auto [lo, hi] : covers_)
        if (rank[static_cast<std::size_t>(hi)] != rank[static_cast<std::size_t>(lo)] + 1) return std::nullopt;
    for (int r : rank)
        if (r < 0 && size() > 1) return std::nullopt;
    return rank;
}

namespace {
int unique_bound(const finite_poset& p, int a, int b, bool upper) {
    int n = p.size();
    std::vector<int> bounds;
    for (int c = 0; c < n; ++c)
        if (upper ? (p.leq(a, c) && p.leq(b, c)) : (p.leq(c, a) && p.leq(c, b))) bounds.push_back(c);
    for (int c : bounds) {
        bool least = true;
        for (int d : bounds)
            if (upper ? !p.leq(c, d) : !p.leq(d, c)) {
                least = false;
                break;
            }
        if (least) return c;
    }
    return -1;
}
}  // namespace

bool finite_poset::is_lattice(std::string* why) const {
    if (size() == 0) {
        if (why) *why = "empty poset";
        return false;
    }
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b) {
            if (unique_bound(*this, a, b, true) < 0) {
                if (why) *why = "no join of " + name(a) + " and " + name(b);
                return false;
            }
            if (unique_bound(*this, a, b, false) < 0) {
                if (why) *why = "no meet of " + name(a) + " and " + name(b);
                return false;
            }
        }
    return true;
}

int finite_poset::join(int a, int b) const {
    int c = unique_bound(*this, a, b, true);
    if (c < 0) throw error("finite_poset: join does not exist");
    return c;
}

int finite_poset::meet(int a, int b) const {
    int c = unique_bound(*this, a, b, false);
    if (c < 0) throw error("finite_poset: meet does not exist");
    return c;
}

bool finite_poset::lower_semimodular(std::string* why) const {
    for (int z = 0; z < size(); ++z) {
        const auto& lows = down_adj_[static_cast<std::size_t>(z)];
        for (std::size_t i = 0; i < lows.size(); ++i)
            for (std::size_t j = i + 1; j < lows.size(); ++j) {
                int x = lows[i], y = lows[j];
                int m = unique_bound(*this, x, y, false);
                if (m < 0) {
                    if (why) *why = "no meet of " + name(x) + " and " + name(y);
                    return false;
                }
                auto covered_by = [&](int lo, int hi) {
                    const auto& ups = up_adj_[static_cast<std::size_t>(lo)];
                    return std::find(ups.begin(), ups.end(), hi) != ups.end();
                };
                if (!covered_by(m, x) || !covered_by(m, y)) {
                    if (why)
                        *why = "meet of " + name(x) + " and " + name(y) + " does not cover both";
                    return false;
                }
            }
    }
    return true;
}

std::vector<int> finite_poset::meet_irreducibles() const {
    auto t = top();
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (t && i == *t) continue;
        if (up_adj_[static_cast<std::size_t>(i)].size() == 1) out.push_back(i);
    }
    return out;
}

std::vector<int> finite_poset::elements_between(int x, int y) const {
    std::vector<int> out;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) out.push_back(z);
    return out;
}

long long finite_poset::mobius(int x, int y) const {
    if (!leq(x, y)) throw error("finite_poset: mobius requires x <= y");
    std::vector<int> interval = elements_between(x, y);
    // linear extension: down-set size within the interval grows strictly
    // along the order, so sorting by it processes every w < z before z
    std::vector<std::pair<int, int>> keyed;
    for (int z : interval) {
        int below = 0;
        for (int w : interval)
            if (leq(w, z)) ++below;
        keyed.emplace_back(below, z);
    }
    std::sort(keyed.begin(), keyed.end());
    interval.clear();
    for (auto [k, z] : keyed) interval.push_back(z);
    std::map<int, long long> mu;
    for (int z : interval) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        long long s = 0;
        for (int w : interval)
            if (leq(x, w) && less(w, z)) s += mu[w];
        mu[z] = -s;
    }
    return mu[y];
}

}  // namespace oig
