#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <string>

#include "sublin/exact.hpp"
#include "sublin/local_oracles.hpp"

namespace sublin {

VertexMisOracle::VertexMisOracle(LocalGraph& g, RankSource ranks, MemoScope memo)
    : g_(&g),
      ranks_(ranks),
      scope_(memo),
      mis_(
          [this](const Vertex& v) { return g_->neighbors(v); },
          [this](const Vertex& a, const Vertex& b) {
              return ranks_.before(std::span<const Vertex>(&a, 1), std::span<const Vertex>(&b, 1));
          },
          [this] { ++nodes_; }) {}

bool VertexMisOracle::member(Vertex v) {
    if (scope_ == MemoScope::Query) mis_.clear();
    return mis_.member(v);
}

struct MatchingOracle::Level {
    RankSource ranks;
    std::unordered_map<std::uint64_t, bool> in_m;
    std::unordered_map<Vertex, bool> free;
    std::unordered_map<std::uint64_t, std::vector<PathKey>> through;
    std::unique_ptr<GreedyMis<PathKey, PathKeyHash>> mis;
};

// Marks the outermost oracle call, where per-query bookkeeping happens.
class MatchingOracle::Scope {
public:
    explicit Scope(MatchingOracle& o) : o_(o), top_(o.depth_ == 0) {
        if (top_) {
            if (o_.opt_.memo == MemoScope::Query) o_.clear_memo();
            o_.query_nodes_ = 0;
            ++o_.stats_.top_queries;
        }
        if (++o_.depth_ > o_.opt_.max_depth) {
            --o_.depth_;
            throw OracleLimitError("matching oracle: recursion depth exceeds " + std::to_string(o_.opt_.max_depth));
        }
    }
    ~Scope() {
        --o_.depth_;
        if (top_) o_.stats_.largest_query = std::max(o_.stats_.largest_query, o_.query_nodes_);
    }
    bool top() const { return top_; }

private:
    MatchingOracle& o_;
    bool top_;
};

MatchingOracle::MatchingOracle(LocalGraph& g, Seed seed, int k, OracleOptions options)
    : g_(&g), seed_(seed), k_(k), opt_(options), comp_state_(g.vertex_count(), 0) {
    if (k < 0) throw UsageError("matching oracle: k must be non-negative");
    stats_.levels.resize(static_cast<std::size_t>(k) + 1);
    solved_.resize(static_cast<std::size_t>(k) + 1);
    levels_.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) {
        auto lv = std::make_unique<Level>();
        lv->ranks = RankSource(seed, i);
        const RankSource* ranks = &lv->ranks;
        lv->mis = std::make_unique<GreedyMis<PathKey, PathKeyHash>>(
            [this, i](const PathKey& p) { return sharing_vertex(i, p); },
            [ranks](const PathKey& a, const PathKey& b) { return ranks->before(a, b); },
            [this, i] {
                ++stats_.levels[static_cast<std::size_t>(i)].mis_nodes;
                count_node();
            });
        levels_[static_cast<std::size_t>(i)] = std::move(lv);
    }
}

MatchingOracle::~MatchingOracle() = default;

void MatchingOracle::count_node() {
    if (++query_nodes_ > opt_.node_cap)
        throw OracleLimitError("matching oracle: more than " + std::to_string(opt_.node_cap) +
                               " oracle nodes in one query");
}

void MatchingOracle::clear_memo() {
    for (int i = 1; i <= k_; ++i) {
        auto& lv = *levels_[static_cast<std::size_t>(i)];
        lv.in_m.clear();
        lv.free.clear();
        lv.through.clear();
        lv.mis->clear();
    }
}

void MatchingOracle::try_fallback(Vertex v) {
    if (!opt_.component_fallback || k_ == 0 || comp_state_[v] != 0) return;
    std::vector<Vertex> comp{v};
    std::unordered_map<Vertex, Vertex> local{{v, 0}};
    std::size_t max_deg = 0;
    bool too_big = false;
    for (std::size_t head = 0; head < comp.size() && !too_big; ++head) {
        const auto& nb = g_->neighbors(comp[head]);
        max_deg = std::max(max_deg, nb.size());
        for (Vertex w : nb) {
            if (local.count(w)) continue;
            if (comp.size() >= opt_.fallback_max_vertices) {
                too_big = true;
                break;
            }
            local.emplace(w, static_cast<Vertex>(comp.size()));
            comp.push_back(w);
        }
    }
    // Offline construction is used only when the component is no larger than the
    // Delta^(2k) ball the recursion could explore anyway.
    double ball = std::pow(static_cast<double>(max_deg), 2.0 * k_);
    if (too_big || static_cast<double>(comp.size()) > ball) {
        for (Vertex x : comp) comp_state_[x] = 2;
        return;
    }
    std::vector<Edge> edges;
    for (Vertex x : comp)
        for (Vertex w : g_->neighbors(x))
            if (x < w) edges.emplace_back(local[x], local[w]);
    Graph sub(comp.size(), std::move(edges), ListOrder::Global);
    OfflineLayeredState st;
    try {
        st = offline_layered(sub, k_, seed_, &comp, opt_.node_cap);
    } catch (const EnumerationLimitError&) {
        // Too many augmenting paths to list; the local recursion and its node cap take over.
        for (Vertex x : comp) comp_state_[x] = 2;
        ++stats_.components_declined;
        return;
    }
    for (int i = 1; i <= k_; ++i) {
        auto& table = solved_[static_cast<std::size_t>(i)];
        for (const auto& e : sub.edges()) table[edge_key(comp[e.u], comp[e.v])] = false;
        for (const auto& e : st.matchings[static_cast<std::size_t>(i)]) table[edge_key(comp[e.u], comp[e.v])] = true;
    }
    for (Vertex x : comp) comp_state_[x] = 1;
    ++stats_.components_solved;
}

bool MatchingOracle::in_matching(int level, Vertex a, Vertex b) {
    if (level < 0 || level > k_) throw UsageError("matching oracle: level out of range");
    Scope scope(*this);
    if (scope.top()) try_fallback(a);
    return o(level, a, b);
}

bool MatchingOracle::vertex_matched(int level, Vertex v) {
    if (level < 0 || level > k_) throw UsageError("matching oracle: level out of range");
    Scope scope(*this);
    if (scope.top()) try_fallback(v);
    return !is_free(level, v);
}

bool MatchingOracle::is_augmenting(int level, const PathKey& p) {
    if (level < 1 || level > k_) throw UsageError("matching oracle: level out of range");
    Scope scope(*this);
    ++stats_.levels[static_cast<std::size_t>(level)].path_checks;
    if (p.size() != static_cast<std::size_t>(2 * level)) return false;
    std::set<Vertex> distinct(p.begin(), p.end());
    if (distinct.size() != p.size()) return false;
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        const auto& nb = g_->neighbors(p[j]);
        if (std::find(nb.begin(), nb.end(), p[j + 1]) == nb.end()) return false;
        bool want_matched = j % 2 == 1;
        if (o(level - 1, p[j], p[j + 1]) != want_matched) return false;
    }
    return is_free(level - 1, p.front()) && is_free(level - 1, p.back());
}

bool MatchingOracle::in_path_mis(int level, const PathKey& p) {
    if (level < 1 || level > k_) throw UsageError("matching oracle: level out of range");
    Scope scope(*this);
    return h(level, canonical_path(p));
}

std::vector<PathKey> MatchingOracle::augmenting_paths_through(int level, Vertex a, Vertex b) {
    if (level < 1 || level > k_) throw UsageError("matching oracle: level out of range");
    Scope scope(*this);
    return through(level, a, b);
}

bool MatchingOracle::o(int level, Vertex a, Vertex b) {
    if (level == 0) return false;
    const auto key = edge_key(a, b);
    const auto li = static_cast<std::size_t>(level);
    if (comp_state_[a] == 1) {
        auto it = solved_[li].find(key);
        if (it != solved_[li].end()) return it->second;
    }
    auto& lv = *levels_[li];
    if (auto it = lv.in_m.find(key); it != lv.in_m.end()) return it->second;
    Scope scope(*this);
    ++stats_.levels[li].matching_nodes;
    count_node();
    bool prev = o(level - 1, a, b);
    bool flipped = false;
    for (const auto& p : through(level, a, b)) {
        if (h(level, p)) {
            flipped = true;
            break;
        }
    }
    bool ans = prev != flipped;
    lv.in_m.emplace(key, ans);
    if (trace_) *trace_ << "O " << level << ' ' << std::min(a, b) << ' ' << std::max(a, b) << ' ' << ans << '\n';
    return ans;
}

bool MatchingOracle::is_free(int level, Vertex v) {
    if (level == 0) return true;
    auto& lv = *levels_[static_cast<std::size_t>(level)];
    if (auto it = lv.free.find(v); it != lv.free.end()) return it->second;
    bool free = true;
    for (Vertex w : g_->neighbors(v)) {
        if (o(level, v, w)) {
            free = false;
            break;
        }
    }
    lv.free.emplace(v, free);
    return free;
}

bool MatchingOracle::h(int level, const PathKey& p) {
    Scope scope(*this);
    bool ans = levels_[static_cast<std::size_t>(level)]->mis->member(p);
    if (trace_) {
        *trace_ << "H " << level;
        for (Vertex v : p) *trace_ << ' ' << v;
        *trace_ << ' ' << ans << '\n';
    }
    return ans;
}

// Arms leave `start` alternating between unmatched and matched edges of M_{level-1};
// only arms whose last edge is unmatched are kept. Each arm lists vertices after start.
void MatchingOracle::arms(int level, Vertex start, Vertex avoid, bool first_matched, std::size_t max_len,
                          std::vector<std::vector<Vertex>>& out) {
    std::vector<Vertex> arm;
    std::vector<Vertex> used{start, avoid};
    auto on_arm = [&](Vertex w) { return std::find(used.begin(), used.end(), w) != used.end(); };
    auto rec = [&](auto&& self, Vertex x, bool want_matched) -> void {
        if (arm.size() == max_len) return;
        for (Vertex w : g_->neighbors(x)) {
            if (on_arm(w) || o(level - 1, x, w) != want_matched) continue;
            count_node();  // arm extensions count against the cap like oracle calls
            arm.push_back(w);
            used.push_back(w);
            if (!want_matched) out.push_back(arm);
            self(self, w, !want_matched);
            arm.pop_back();
            used.pop_back();
            if (want_matched) break;  // a vertex has at most one matched edge
        }
    };
    rec(rec, start, first_matched);
}

const std::vector<PathKey>& MatchingOracle::through(int level, Vertex a, Vertex b) {
    auto& lv = *levels_[static_cast<std::size_t>(level)];
    const auto key = edge_key(a, b);
    if (auto it = lv.through.find(key); it != lv.through.end()) return it->second;
    if (a > b) std::swap(a, b);

    const std::size_t len = static_cast<std::size_t>(2 * level - 1);
    const bool matched = o(level - 1, a, b);
    std::vector<std::vector<Vertex>> left{{}}, right{{}};
    arms(level, a, b, !matched, len - 1, left);
    arms(level, b, a, !matched, len - 1, right);

    std::vector<PathKey> found;
    for (const auto& la : left) {
        if (la.empty() && matched) continue;
        Vertex left_end = la.empty() ? a : la.back();
        for (const auto& ra : right) {
            if (la.size() + ra.size() != len - 1) continue;
            count_node();
            if (ra.empty() && matched) continue;
            Vertex right_end = ra.empty() ? b : ra.back();
            bool overlap = std::any_of(la.begin(), la.end(), [&](Vertex x) {
                return std::find(ra.begin(), ra.end(), x) != ra.end();
            });
            if (overlap) continue;
            ++stats_.levels[static_cast<std::size_t>(level)].path_checks;
            if (!is_free(level - 1, left_end) || !is_free(level - 1, right_end)) continue;
            std::vector<Vertex> seq(la.rbegin(), la.rend());
            seq.push_back(a);
            seq.push_back(b);
            seq.insert(seq.end(), ra.begin(), ra.end());
            found.push_back(canonical_path(std::move(seq)));
        }
    }
    std::sort(found.begin(), found.end());
    return lv.through.emplace(key, std::move(found)).first->second;
}

std::vector<PathKey> simple_paths_through_edge(LocalGraph& g, Vertex a, Vertex b, std::size_t length) {
    if (length == 0) return {};
    auto collect = [&](Vertex start, Vertex avoid) {
        std::vector<std::vector<Vertex>> out{{}};
        std::vector<Vertex> arm, used{start, avoid};
        auto rec = [&](auto&& self, Vertex x) -> void {
            if (arm.size() + 1 == length) return;
            for (Vertex w : g.neighbors(x)) {
                if (std::find(used.begin(), used.end(), w) != used.end()) continue;
                arm.push_back(w);
                used.push_back(w);
                out.push_back(arm);
                self(self, w);
                arm.pop_back();
                used.pop_back();
            }
        };
        rec(rec, start);
        return out;
    };
    auto left = collect(a, b), right = collect(b, a);
    std::vector<PathKey> found;
    for (const auto& la : left)
        for (const auto& ra : right) {
            if (la.size() + ra.size() + 1 != length) continue;
            if (std::any_of(la.begin(), la.end(),
                            [&](Vertex x) { return std::find(ra.begin(), ra.end(), x) != ra.end(); }))
                continue;
            std::vector<Vertex> seq(la.rbegin(), la.rend());
            seq.push_back(a);
            seq.push_back(b);
            seq.insert(seq.end(), ra.begin(), ra.end());
            found.push_back(canonical_path(std::move(seq)));
        }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<PathKey> MatchingOracle::sharing_vertex(int level, const PathKey& p) {
    std::vector<PathKey> out;
    for (Vertex x : p)
        for (Vertex w : g_->neighbors(x))
            for (const auto& q : through(level, x, w))
                if (q != p) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sublin
