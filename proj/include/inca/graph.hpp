#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inca/errors.hpp"

namespace inca {

// Simple undirected graph on {0..n-1}, adjacency kept symmetric and
// irreflexive. Bitset rows for the branch-and-bound solver.
class SimpleGraph {
public:
    SimpleGraph() : SimpleGraph(0) {}
    explicit SimpleGraph(int n)
        : n_(n), blocks_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * blocks_, 0) {}

    int size() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * blocks_ + (v >> 6)] >> (v & 63)) & 1;
    }

    int blocks() const { return blocks_; }
    const std::uint64_t* row(int u) const { return adj_.data() + static_cast<std::size_t>(u) * blocks_; }

    static SimpleGraph cycle(int n);
    static SimpleGraph complete(int n);
    static SimpleGraph edgeless(int n) { return SimpleGraph(n); }

private:
    int n_;
    int blocks_;
    std::vector<std::uint64_t> adj_;
};

// Vertices V(G) x V(H); distinct tuples adjacent iff every coordinate is equal
// or adjacent. Index of (g,h) is g*|H| + h.
SimpleGraph strong_product(const SimpleGraph& g, const SimpleGraph& h, int max_vertices = 4096);

// Exact maximum independent set size; branch and bound with a greedy clique
// cover bound. Throws resource_limit above max_vertices.
int independence_number(const SimpleGraph& g, int max_vertices = 512);

}  // namespace inca
