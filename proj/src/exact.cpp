#include "sublin/exact.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace sublin {

std::vector<Edge> ExactMatching::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] != kUnmatched && v < mate[v]) out.emplace_back(static_cast<Vertex>(v), mate[v]);
    return out;
}

namespace {

// Edmonds' search for an augmenting path from one root, contracting blossoms.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g)
        : g_(g), n_(g.n()), parent_(n_), base_(n_), used_(n_), blossom_(n_), mark_(n_) {}

    // Returns the free endpoint reached, or kUnmatched. parent_ then encodes the path.
    Vertex find(Vertex root, const std::vector<Vertex>& mate) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kUnmatched);
        std::iota(base_.begin(), base_.end(), Vertex{0});
        used_[root] = 1;
        queue_.assign(1, root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex v = queue_[head];
            for (Vertex to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != kUnmatched && parent_[mate[to]] != kUnmatched)) {
                    Vertex cur = lca(v, to, mate);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to, mate);
                    mark_path(to, cur, v, mate);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(static_cast<Vertex>(i));
                            }
                        }
                    }
                } else if (parent_[to] == kUnmatched) {
                    parent_[to] = v;
                    if (mate[to] == kUnmatched) return to;
                    used_[mate[to]] = 1;
                    queue_.push_back(mate[to]);
                }
            }
        }
        return kUnmatched;
    }

    void augment(Vertex end, std::vector<Vertex>& mate) const {
        Vertex v = end;
        while (v != kUnmatched) {
            Vertex pv = parent_[v];
            Vertex next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

private:
    Vertex lca(Vertex a, Vertex b, const std::vector<Vertex>& mate) {
        std::fill(mark_.begin(), mark_.end(), 0);
        for (;;) {
            a = base_[a];
            mark_[a] = 1;
            if (mate[a] == kUnmatched) break;
            a = parent_[mate[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark_[b]) return b;
            b = parent_[mate[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child, const std::vector<Vertex>& mate) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[mate[v]]] = 1;
            parent_[v] = child;
            child = mate[v];
            v = parent_[mate[v]];
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> parent_, base_;
    std::vector<char> used_, blossom_, mark_;
    std::vector<Vertex> queue_;
};

void greedy_fill(const Graph& g, std::vector<Vertex>& mate) {
    for (const auto& e : g.edges())
        if (mate[e.u] == kUnmatched && mate[e.v] == kUnmatched) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
}

std::size_t count_pairs(const std::vector<Vertex>& mate) {
    std::size_t c = 0;
    for (auto m : mate) c += m != kUnmatched;
    return c / 2;
}

}  // namespace

ExactMatching max_matching_from(const Graph& g, std::vector<Vertex> mate) {
    if (mate.size() != g.n()) throw UsageError("max_matching_from: mate size mismatch");
    greedy_fill(g, mate);
    BlossomSearch search(g);
    // A root with no augmenting path keeps having none after later augmentations.
    for (std::size_t r = 0; r < g.n(); ++r) {
        if (mate[r] != kUnmatched) continue;
        Vertex end = search.find(static_cast<Vertex>(r), mate);
        if (end != kUnmatched) search.augment(end, mate);
    }
    ExactMatching out;
    out.size = count_pairs(mate);
    out.mate = std::move(mate);
    return out;
}

ExactMatching max_matching_exact(const Graph& g, std::size_t cap) {
    if (g.n() > cap)
        throw UsageError("exact matching: n = " + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    auto out = max_matching_from(g, std::vector<Vertex>(g.n(), kUnmatched));
    if (has_augmenting_path(g, out.mate)) throw std::logic_error("exact matching: certification failed");
    return out;
}

bool has_augmenting_path(const Graph& g, const std::vector<Vertex>& mate) {
    BlossomSearch search(g);
    for (std::size_t r = 0; r < g.n(); ++r)
        if (mate[r] == kUnmatched && search.find(static_cast<Vertex>(r), mate) != kUnmatched) return true;
    return false;
}

bool is_valid_matching(const Graph& g, const std::vector<Edge>& matching) {
    std::unordered_set<Vertex> used;
    for (const auto& e : matching) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
    }
    return true;
}

Graph graph_from_edges(std::size_t n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges), ListOrder::Global);
}

std::vector<char> offline_greedy_mis(const Graph& g, const RankSource& ranks) {
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::vector<std::uint64_t> r(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
        Vertex x = static_cast<Vertex>(v);
        r[v] = ranks.rank(std::span<const Vertex>(&x, 1));
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return r[a] != r[b] ? r[a] < r[b] : a < b; });
    std::vector<char> in(g.n(), 0), blocked(g.n(), 0);
    for (Vertex v : order) {
        if (blocked[v]) continue;
        in[v] = 1;
        for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    return in;
}

double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
    if (counts.size() < 2) throw UsageError("chi-square: need at least two cells");
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    double expected = total / static_cast<double>(counts.size());
    if (expected < 5.0) throw UsageError("chi-square: fewer than 5 expected observations per cell");
    double stat = 0;
    for (auto c : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    double dof = static_cast<double>(counts.size() - 1);
    return boost::math::gamma_q(dof / 2.0, stat / 2.0);
}

FractionalCheck check_fractional_bound(const Graph& g, const std::vector<double>& weights) {
    if (weights.size() != g.m()) throw UsageError("fractional check: one weight per edge required");
    FractionalCheck out;
    std::vector<double> load(g.n(), 0.0);
    bool nonneg = true;
    for (std::size_t i = 0; i < g.m(); ++i) {
        nonneg = nonneg && weights[i] >= 0.0;
        load[g.edges()[i].u] += weights[i];
        load[g.edges()[i].v] += weights[i];
        out.size += weights[i];
    }
    out.valid = nonneg && std::all_of(load.begin(), load.end(), [](double x) { return x <= 1.0 + 1e-9; });
    out.bound = 1.5 * static_cast<double>(max_matching_exact(g).size);
    out.within_bound = out.size <= out.bound + 1e-9;
    return out;
}

}  // namespace sublin
