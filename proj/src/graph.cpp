#include "sublin/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sublin {

Graph::Graph(std::size_t n, std::vector<Edge> edges, ListOrder order, Seed order_seed)
    : n_(n), edges_(std::move(edges)), order_(order) {
    if (n_ > 0xffffffffULL) throw UsageError("graph: too many vertices");
    for (auto& e : edges_) {
        if (e.u == e.v) throw UsageError("graph: self-loop at " + std::to_string(e.u));
        if (e.v >= n_) throw UsageError("graph: endpoint out of range: " + std::to_string(e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw UsageError("graph: duplicate edge");

    std::vector<std::size_t> deg(n_, 0);
    for (auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    sorted_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto& e : edges_) {
        sorted_[fill[e.u]++] = e.v;
        sorted_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v)
        std::sort(sorted_.begin() + offsets_[v], sorted_.begin() + offsets_[v + 1]);

    list_ = sorted_;
    if (order_ == ListOrder::PerVertexRandom) {
        for (std::size_t v = 0; v < n_; ++v) {
            auto rng = order_seed.derive(static_cast<std::uint64_t>(v)).engine();
            std::shuffle(list_.begin() + offsets_[v], list_.begin() + offsets_[v + 1], rng);
        }
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto first = sorted_.begin() + offsets_[a];
    auto last = sorted_.begin() + offsets_[a + 1];
    return std::binary_search(first, last, b);
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.n();
    s.m = g.m();
    for (std::size_t v = 0; v < g.n(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
    s.avg_degree = g.n() == 0 ? 0.0 : 2.0 * static_cast<double>(g.m()) / static_cast<double>(g.n());
    return s;
}

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in, ListOrder order, Seed order_seed) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_data_line(in, line, lineno)) throw UsageError("graph file: missing header");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw UsageError("graph file: bad header on line " + std::to_string(lineno));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw UsageError("graph file: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            throw UsageError("graph file: bad edge on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw UsageError("graph file: vertex out of range on line " + std::to_string(lineno));
        if (u >= v) throw UsageError("graph file: need u < v on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_data_line(in, line, lineno))
        throw UsageError("graph file: trailing data on line " + std::to_string(lineno));
    return Graph(static_cast<std::size_t>(n), std::move(edges), order, order_seed);
}

Graph load_graph(const std::string& path, ListOrder order, Seed order_seed) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graph file: " + path);
    return read_graph(in, order, order_seed);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace sublin
