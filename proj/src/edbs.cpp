#include "sublin/edbs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <string>

namespace sublin {

EdbsParams::EdbsParams(double eps, std::uint32_t b) : epsilon(eps), beta(b) {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("edbs: epsilon must be in (0,1)");
    if (b < 2) throw UsageError("edbs: beta must be at least 2");
    double eb = eps * static_cast<double>(b);
    double rounded = std::round(eb);
    if (std::fabs(eb - rounded) > 1e-9 || rounded < 1.0)
        throw UsageError("edbs: epsilon*beta must be a positive integer");
    eps_beta_ = static_cast<std::uint32_t>(rounded);
}

EdbsParams EdbsParams::from_epsilon(double eps, double c_beta) {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("edbs: epsilon must be in (0,1)");
    if (!(c_beta > 0.0)) throw UsageError("edbs: c_beta must be positive");
    double raw = c_beta / (eps * eps * eps);
    auto b = static_cast<std::uint32_t>(std::max(2.0, std::ceil(raw - 1e-9)));
    for (;; ++b) {
        double eb = eps * static_cast<double>(b);
        if (std::fabs(eb - std::round(eb)) <= 1e-9 && std::round(eb) >= 1.0) return EdbsParams(eps, b);
    }
}

Edbs::Edbs(std::size_t n, EdbsParams params) : params_(params), deg_(n, 0), adj_(n) {
    if (params_.beta == 0) throw UsageError("edbs: parameters not initialised");
}

void Edbs::link(Vertex u, Vertex v) {
    std::int64_t du = deg_[u], dv = deg_[v];
    std::int64_t beta = params_.beta;
    phi2_ += 4 * beta - 6 - 4 * (du + dv);
    ++deg_[u];
    ++deg_[v];
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    keys_.insert(edge_key(u, v));
}

void Edbs::unlink(Vertex u, Vertex v) {
    std::int64_t du = deg_[u], dv = deg_[v];
    std::int64_t beta = params_.beta;
    phi2_ += 4 * (du + dv) - 4 * beta - 2;
    --deg_[u];
    --deg_[v];
    auto drop = [](std::vector<Vertex>& list, Vertex x) {
        auto it = std::find(list.begin(), list.end(), x);
        *it = list.back();
        list.pop_back();
    };
    drop(adj_[u], v);
    drop(adj_[v], u);
    keys_.erase(edge_key(u, v));
}

void Edbs::insert(Vertex u, Vertex v) {
    if (u == v || u >= n() || v >= n()) throw UsageError("edbs insert: bad edge");
    if (contains(u, v)) throw InvariantError("edbs insert: edge already present");
    if (!is_underfull(u, v))
        throw InvariantError("edbs insert: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not underfull");
    std::int64_t before = phi2_;
    link(u, v);
    if (phi2_ - before < 2) throw InvariantError("edbs insert: potential did not increase");
    log_.push_back({OpRecord::Insert, Edge(u, v), phi2_});
}

void Edbs::force_insert(Vertex u, Vertex v) {
    if (u == v || u >= n() || v >= n() || contains(u, v)) throw UsageError("edbs force_insert: bad edge");
    link(u, v);
    log_.push_back({OpRecord::Insert, Edge(u, v), phi2_});
}

void Edbs::remove(Vertex u, Vertex v) {
    if (!contains(u, v)) throw InvariantError("edbs delete: edge not present");
    if (!is_overfull(u, v)) throw InvariantError("edbs delete: edge is not overfull");
    std::int64_t before = phi2_;
    unlink(u, v);
    if (phi2_ - before < 2) throw InvariantError("edbs delete: potential did not increase");
    log_.push_back({OpRecord::Delete, Edge(u, v), phi2_});
}

std::size_t Edbs::restore(Vertex u, Vertex v) {
    // Only edges at a vertex whose degree grew can turn overfull, and a deletion
    // never creates a new overfull edge.
    std::deque<Vertex> work{u, v};
    std::size_t deleted = 0;
    while (!work.empty()) {
        Vertex x = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < adj_[x].size();) {
            Vertex y = adj_[x][i];
            if (edge_degree(x, y) > params_.beta) {
                remove(x, y);
                ++deleted;
                work.push_back(y);
            } else {
                ++i;
            }
        }
    }
    return deleted;
}

std::vector<Edge> Edbs::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> Edbs::overfull_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges())
        if (edge_degree(e.u, e.v) > params_.beta) out.push_back(e);
    return out;
}

std::int64_t Edbs::recompute_potential2() const {
    std::int64_t sum = 0, sq = 0;
    for (auto d : deg_) {
        sum += d;
        sq += static_cast<std::int64_t>(d) * d;
    }
    return (2 * static_cast<std::int64_t>(params_.beta) - 1) * sum - 2 * sq;
}

void Edbs::dump(std::ostream& out) const {
    out << "edbs n=" << n() << " beta=" << params_.beta << " eps=" << params_.epsilon
        << " phi2=" << phi2_ << '\n';
    auto es = edges();
    out << "edges " << es.size() << '\n';
    for (const auto& e : es) out << e.u << ' ' << e.v << '\n';
    out << "ops " << log_.size() << '\n';
    for (const auto& op : log_)
        out << static_cast<char>(op.kind) << ' ' << op.edge.u << ' ' << op.edge.v << ' '
            << op.potential2_after << '\n';
}

long first_potential_violation(std::size_t n, const EdbsParams& params, const std::vector<OpRecord>& log) {
    std::vector<std::int64_t> deg(n, 0);
    std::int64_t phi2 = 0;
    const std::int64_t beta = params.beta;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& op = log[i];
        std::int64_t du = deg[op.edge.u], dv = deg[op.edge.v];
        std::int64_t step = op.kind == OpRecord::Insert ? 4 * beta - 6 - 4 * (du + dv)
                                                         : 4 * (du + dv) - 4 * beta - 2;
        int d = op.kind == OpRecord::Insert ? 1 : -1;
        deg[op.edge.u] += d;
        deg[op.edge.v] += d;
        phi2 += step;
        if (step < 2 || phi2 != op.potential2_after) return static_cast<long>(i);
    }
    return -1;
}

std::uint64_t round_length(const SchematicParams& sp, std::size_t n) {
    if (sp.m_star <= 0.0) return 0;
    double mu = std::max(sp.mu_star, 1.0);
    double delta = std::max(sp.delta_star, 1.0);
    double len = sp.scale * 100.0 * sp.m_star * std::log(static_cast<double>(std::max<std::size_t>(n, 1))) /
                 (mu * std::pow(delta, sp.gamma));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(len)));
}

EdbsBuild build_edbs(std::size_t n, const EdbsParams& params, const SchematicParams& sp,
                     const EdgeSampler& sample) {
    EdbsBuild out{Edbs(n, params), 0, 0};
    const std::uint64_t len = round_length(sp, n);
    for (;;) {
        ++out.rounds;
        bool dirty = false;
        for (std::uint64_t s = 0; s < len; ++s) {
            Edge e = sample();
            ++out.samples;
            if (out.h.is_underfull(e.u, e.v)) {
                out.h.insert(e.u, e.v);
                out.h.restore(e.u, e.v);
                dirty = true;
            }
        }
        if (!dirty) return out;
    }
}

}  // namespace sublin
