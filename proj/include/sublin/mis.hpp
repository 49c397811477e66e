#pragma once

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <vector>

namespace sublin {

// Membership in the greedy maximal independent set taken in a fixed total order:
// x is in the set iff no earlier neighbor is. Answers are memoised.
template <class Key, class Hash = std::hash<Key>>
class GreedyMis {
public:
    using NeighborFn = std::function<std::vector<Key>(const Key&)>;
    using BeforeFn = std::function<bool(const Key&, const Key&)>;
    using NodeFn = std::function<void()>;

    GreedyMis(NeighborFn neighbors, BeforeFn before, NodeFn on_node = {})
        : neighbors_(std::move(neighbors)), before_(std::move(before)), on_node_(std::move(on_node)) {}

    bool member(const Key& x) {
        if (auto it = memo_.find(x); it != memo_.end()) return it->second;
        if (on_node_) on_node_();
        auto nb = neighbors_(x);
        std::erase_if(nb, [&](const Key& y) { return !before_(y, x); });
        std::sort(nb.begin(), nb.end(), before_);
        bool in = true;
        for (const auto& y : nb) {
            if (member(y)) {
                in = false;
                break;
            }
        }
        memo_.emplace(x, in);
        return in;
    }

    void clear() { memo_.clear(); }
    std::size_t memo_size() const { return memo_.size(); }

private:
    NeighborFn neighbors_;
    BeforeFn before_;
    NodeFn on_node_;
    std::unordered_map<Key, bool, Hash> memo_;
};

}  // namespace sublin
