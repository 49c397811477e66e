#include "sublin/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sublin {

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (spec.kind.empty()) throw UsageError("generator: empty kind");
    if (colon == std::string::npos) return spec;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("generator: expected key=value, got '" + item + "'");
        spec.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::string out = kind;
    char sep = ':';
    for (const auto& [k, v] : params) {
        out += sep + k + "=" + v;
        sep = ',';
    }
    return out;
}

namespace {

class Params {
public:
    explicit Params(const GeneratorSpec& spec) : spec_(spec) {}

    std::size_t count(const std::string& key) {
        used_.insert(key);
        auto it = spec_.params.find(key);
        if (it == spec_.params.end()) throw UsageError(spec_.kind + ": missing parameter '" + key + "'");
        try {
            std::size_t pos = 0;
            long long v = std::stoll(it->second, &pos);
            if (pos != it->second.size() || v < 0) throw std::invalid_argument("");
            return static_cast<std::size_t>(v);
        } catch (const std::logic_error&) {
            throw UsageError(spec_.kind + ": bad integer for '" + key + "': " + it->second);
        }
    }

    double real(const std::string& key) {
        used_.insert(key);
        auto it = spec_.params.find(key);
        if (it == spec_.params.end()) throw UsageError(spec_.kind + ": missing parameter '" + key + "'");
        try {
            std::size_t pos = 0;
            double v = std::stod(it->second, &pos);
            if (pos != it->second.size() || !std::isfinite(v)) throw std::invalid_argument("");
            return v;
        } catch (const std::logic_error&) {
            throw UsageError(spec_.kind + ": bad number for '" + key + "': " + it->second);
        }
    }

    std::string text(const std::string& key) {
        used_.insert(key);
        auto it = spec_.params.find(key);
        if (it == spec_.params.end()) throw UsageError(spec_.kind + ": missing parameter '" + key + "'");
        return it->second;
    }

    void finish() const {
        for (const auto& [k, v] : spec_.params)
            if (!used_.count(k)) throw UsageError(spec_.kind + ": unknown parameter '" + k + "'");
    }

private:
    const GeneratorSpec& spec_;
    std::set<std::string> used_;
};

double probability(Params& p, const std::string& key) {
    double x = p.real(key);
    if (x < 0.0 || x > 1.0) throw UsageError("probability out of [0,1]: " + key);
    return x;
}

std::vector<Edge> gnp_edges(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return edges;
}

// Pairing model with incremental rejection; restarts when stuck.
std::vector<Edge> regular_edges(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    if (d >= n && n > 0) throw UsageError("d-regular: need d < n");
    if ((n * d) % 2 != 0) throw UsageError("d-regular: n*d must be even");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vertex> points;
        points.reserve(n * d);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t j = 0; j < d; ++j) points.push_back(static_cast<Vertex>(v));
        std::unordered_set<std::uint64_t> seen;
        std::vector<Edge> edges;
        bool stuck = false;
        while (!points.empty() && !stuck) {
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
                std::size_t i = pick(rng), j = pick(rng);
                if (i == j || points[i] == points[j]) continue;
                auto key = edge_key(points[i], points[j]);
                if (seen.count(key)) continue;
                seen.insert(key);
                edges.emplace_back(points[i], points[j]);
                if (i < j) std::swap(i, j);
                std::swap(points[i], points.back());
                points.pop_back();
                std::swap(points[j], points.back());
                points.pop_back();
                placed = true;
            }
            stuck = !placed;
        }
        if (!stuck) return edges;
    }
    throw UsageError("d-regular: failed to generate a simple graph");
}

}  // namespace

HiddenMatchingLayout hidden_matching_layout(std::size_t half, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("hidden-perfect-matching: eps must be in (0,1)");
    HiddenMatchingLayout layout;
    layout.half = half;
    layout.hub = static_cast<std::size_t>(std::floor(epsilon * static_cast<double>(half) / 2.0 + 1e-9));
    return layout;
}

Graph generate(const GeneratorSpec& spec, Seed seed, ListOrder order) {
    Params p(spec);
    auto rng = seed.derive("generator").engine();
    Seed order_seed = seed.derive("list-order");
    std::size_t n = 0;
    std::vector<Edge> edges;
    const std::string& kind = spec.kind;

    if (kind == "from-file") {
        auto path = p.text("path");
        p.finish();
        return load_graph(path, order, order_seed);
    } else if (kind == "empty") {
        n = p.count("n");
    } else if (kind == "complete") {
        n = p.count("n");
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else if (kind == "path") {
        n = p.count("n");
        for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    } else if (kind == "cycle") {
        n = p.count("n");
        if (n < 3) throw UsageError("cycle: need n >= 3");
        for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
        edges.emplace_back(0, n - 1);
    } else if (kind == "star") {
        std::size_t leaves = p.count("leaves");
        n = leaves + 1;
        for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, v);
    } else if (kind == "petersen") {
        n = 10;
        for (Vertex i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
    } else if (kind == "perfect-matching") {
        n = p.count("n");
        if (n % 2 != 0) throw UsageError("perfect-matching: n must be even");
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i + 1 < n; i += 2) edges.emplace_back(perm[i], perm[i + 1]);
    } else if (kind == "erdos-renyi") {
        n = p.count("n");
        edges = gnp_edges(n, probability(p, "p"), rng);
    } else if (kind == "random-bipartite") {
        std::size_t left = p.count("left");
        std::size_t right = p.count("right");
        double prob = probability(p, "p");
        n = left + right;
        std::bernoulli_distribution coin(prob);
        for (std::size_t u = 0; u < left; ++u)
            for (std::size_t v = 0; v < right; ++v)
                if (coin(rng)) edges.emplace_back(u, left + v);
    } else if (kind == "hidden-perfect-matching") {
        auto layout = hidden_matching_layout(p.count("n"), p.real("eps"));
        std::size_t half = layout.half;
        n = 2 * half + layout.hub;
        std::vector<Vertex> perm(half);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < half; ++i) edges.emplace_back(i, half + perm[i]);
        for (std::size_t h = 0; h < layout.hub; ++h)
            for (std::size_t v = 0; v < 2 * half; ++v) edges.emplace_back(2 * half + h, v);
    } else if (kind == "d-regular") {
        n = p.count("n");
        edges = regular_edges(n, p.count("d"), rng);
    } else if (kind == "lollipop") {
        n = p.count("n");
        std::size_t clique = p.count("clique");
        if (clique > n) throw UsageError("lollipop: clique larger than n");
        for (std::size_t u = 0; u < clique; ++u)
            for (std::size_t v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
        for (std::size_t v = std::max<std::size_t>(clique, 1); v < n; ++v) edges.emplace_back(v - 1, v);
    } else {
        throw UsageError("unknown generator kind: " + kind);
    }
    p.finish();
    return Graph(n, std::move(edges), order, order_seed);
}

}  // namespace sublin
