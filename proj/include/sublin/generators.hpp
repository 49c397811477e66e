#pragma once

#include <map>
#include <string>

#include "sublin/graph.hpp"

namespace sublin {

// A generator kind plus its parameters, e.g. "erdos-renyi:n=200,p=0.15".
struct GeneratorSpec {
    std::string kind;
    std::map<std::string, std::string> params;

    static GeneratorSpec parse(const std::string& text);
    std::string to_string() const;
};

// Kinds: empty, complete, path, cycle, star, petersen, perfect-matching,
// erdos-renyi, random-bipartite, hidden-perfect-matching, d-regular, lollipop, from-file.
Graph generate(const GeneratorSpec& spec, Seed seed, ListOrder order = ListOrder::PerVertexRandom);

// Vertex layout of hidden-perfect-matching: L = [0,half), R = [half,2*half), U = [2*half,n).
struct HiddenMatchingLayout {
    std::size_t half = 0;
    std::size_t hub = 0;
};
HiddenMatchingLayout hidden_matching_layout(std::size_t half, double epsilon);

}  // namespace sublin
