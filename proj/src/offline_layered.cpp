#include "sublin/exact.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace sublin {

namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max() / 4;

// For each vertex x, lower bounds on the length of an alternating path that leaves x
// by an unmatched edge and ends at a free vertex (simplicity ignored), for the two
// nearest distinct free endpoints. A path from start s may not end at s, so the
// second label stands in whenever the first one names s.
struct FreeReach {
    struct Label {
        std::size_t dist = kFar;
        Vertex source = kUnmatched;
    };
    std::vector<std::array<Label, 2>> labels;

    std::size_t excluding(Vertex x, Vertex s) const {
        const auto& l = labels[x];
        return l[0].source != s ? l[0].dist : l[1].dist;
    }
};

FreeReach reach_free(const Graph& g, const std::vector<Vertex>& mate) {
    FreeReach r;
    r.labels.assign(g.n(), {});
    struct Item {
        Vertex x;
        FreeReach::Label label;
    };
    std::deque<Item> queue;
    auto offer = [&](Vertex x, std::size_t dist, Vertex source) {
        auto& l = r.labels[x];
        if (l[0].source == source || l[1].source == source || l[1].dist != kFar) return;
        (l[0].dist == kFar ? l[0] : l[1]) = {dist, source};
        queue.push_back({x, {dist, source}});
    };
    for (std::size_t y = 0; y < g.n(); ++y) {
        if (mate[y] != kUnmatched) continue;
        for (Vertex x : g.neighbors(static_cast<Vertex>(y))) offer(x, 1, static_cast<Vertex>(y));
    }
    while (!queue.empty()) {
        auto [x, label] = queue.front();
        queue.pop_front();
        Vertex y = mate[x];
        if (y == kUnmatched) continue;
        for (Vertex w : g.neighbors(y))
            if (w != x) offer(w, label.dist + 2, label.source);
    }
    return r;
}

class AugmentingEnumerator {
public:
    AugmentingEnumerator(const Graph& g, const std::vector<Vertex>& mate, std::uint64_t& steps, std::uint64_t cap)
        : g_(g), mate_(mate), reach_(reach_free(g, mate)), on_path_(g.n(), 0), steps_(steps), cap_(cap) {}

    // All augmenting paths with exactly `length` edges, each once, oriented from the smaller endpoint.
    std::vector<PathKey> run(std::size_t length) {
        out_.clear();
        for (std::size_t s = 0; s < g_.n(); ++s) {
            if (mate_[s] != kUnmatched || reach_.excluding(static_cast<Vertex>(s), static_cast<Vertex>(s)) > length)
                continue;
            start_ = static_cast<Vertex>(s);
            path_.assign(1, start_);
            on_path_[s] = 1;
            extend(start_, length);
            on_path_[s] = 0;
        }
        return std::move(out_);
    }

private:
    void extend(Vertex x, std::size_t remaining) {
        if (++steps_ > cap_ && cap_ != 0)
            throw EnumerationLimitError("offline layered: more than " + std::to_string(cap_) + " enumeration steps");
        for (Vertex y : g_.neighbors(x)) {
            if (on_path_[y] || mate_[x] == y) continue;
            if (remaining == 1) {
                if (mate_[y] == kUnmatched && start_ < y) {
                    out_.push_back(path_);
                    out_.back().push_back(y);
                }
                continue;
            }
            Vertex z = mate_[y];
            if (z == kUnmatched || on_path_[z] || reach_.excluding(z, start_) > remaining - 2) continue;
            path_.push_back(y);
            path_.push_back(z);
            on_path_[y] = on_path_[z] = 1;
            extend(z, remaining - 2);
            on_path_[y] = on_path_[z] = 0;
            path_.pop_back();
            path_.pop_back();
        }
    }

    const Graph& g_;
    const std::vector<Vertex>& mate_;
    FreeReach reach_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
    std::vector<PathKey> out_;
    Vertex start_ = 0;
    std::uint64_t& steps_;
    std::uint64_t cap_;
};

std::vector<Edge> matching_edges(const std::vector<Vertex>& mate) {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] != kUnmatched && v < mate[v]) out.emplace_back(static_cast<Vertex>(v), mate[v]);
    return out;
}

}  // namespace

OfflineLayeredState offline_layered(const Graph& g, int k, Seed seed, const std::vector<Vertex>* labels,
                                    std::uint64_t step_cap) {
    if (k < 0) throw UsageError("offline_layered: k must be non-negative");
    if (labels && labels->size() != g.n()) throw UsageError("offline_layered: label count mismatch");
    OfflineLayeredState st;
    st.matchings.assign(1, {});
    st.chosen.assign(1, {});
    std::vector<Vertex> mate(g.n(), kUnmatched);
    std::size_t size = 0;
    std::size_t maximum = 0;
    bool maximum_known = false;
    std::uint64_t steps = 0;

    auto global_key = [&](const PathKey& p) {
        if (!labels) return p;
        std::vector<Vertex> seq(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) seq[j] = (*labels)[p[j]];
        return canonical_path(std::move(seq));
    };

    for (int level = 1; level <= k; ++level) {
        if (level >= 2 && !maximum_known) {
            maximum = max_matching_from(g, mate).size;
            maximum_known = true;
        }
        if (maximum_known && size == maximum) {
            // No augmenting path of any length remains, so every later level is unchanged.
            if (st.saturated_from < 0) st.saturated_from = level;
            st.chosen.emplace_back();
            st.matchings.push_back(st.matchings.back());
            continue;
        }
        AugmentingEnumerator paths(g, mate, steps, step_cap);
        auto candidates = paths.run(static_cast<std::size_t>(2 * level - 1));
        RankSource ranks(seed, level);
        std::vector<std::pair<PathKey, std::size_t>> keyed;
        keyed.reserve(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) keyed.emplace_back(global_key(candidates[i]), i);
        std::vector<std::uint64_t> rank(keyed.size());
        for (std::size_t i = 0; i < keyed.size(); ++i) rank[i] = ranks.rank(keyed[i].first);
        std::vector<std::size_t> order(keyed.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rank[a] != rank[b] ? rank[a] < rank[b] : keyed[a].first < keyed[b].first;
        });

        std::vector<char> taken(g.n(), 0);
        std::vector<PathKey> chosen;
        for (std::size_t idx : order) {
            const auto& p = candidates[keyed[idx].second];
            if (std::any_of(p.begin(), p.end(), [&](Vertex v) { return taken[v] != 0; })) continue;
            for (Vertex v : p) taken[v] = 1;
            chosen.push_back(canonical_path(p));
        }
        for (const auto& p : chosen) {
            for (std::size_t j = 0; j + 1 < p.size(); j += 2) {
                mate[p[j]] = p[j + 1];
                mate[p[j + 1]] = p[j];
            }
            ++size;
        }
        std::sort(chosen.begin(), chosen.end());
        st.chosen.push_back(std::move(chosen));
        st.matchings.push_back(matching_edges(mate));
    }
    return st;
}

}  // namespace sublin
