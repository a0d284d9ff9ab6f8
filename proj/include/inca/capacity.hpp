#pragma once

#include <array>
#include <set>
#include <vector>

#include "inca/diagram.hpp"
#include "inca/graph.hpp"
#include "inca/quandle.hpp"

namespace inca {

// Confusion sources for length-k messages. With use_automorphisms off the
// automorphism ranges over the identity only.
struct MessagePolicy {
    bool use_automorphisms{true};
    bool use_triples{false};
};

// All permutations preserving every listed op individually; always a group.
std::vector<std::vector<int>> automorphisms(const MultiQuandle& q);

// (tail, agent, head) color triples occurring in at least one valid coloring.
std::set<std::array<int, 3>> realized_triples(const GaussDiagram& m, const MultiQuandle& q);

// Confusability graph on Q^k: m ~ m' (m != m') iff one automorphism alpha has,
// in every coordinate i, alpha(m_i) = m'_i or (triples enabled) {alpha(m_i),
// m'_i} a pair inside some realized triple. Message index is base-|Q|, first
// coordinate most significant.
SimpleGraph message_graph(const GaussDiagram& m, const MultiQuandle& q, int k,
                          const MessagePolicy& policy, int max_vertices = 512);

struct CapReport {
    std::vector<int> cap;           // cap[i] = Cap_{i+1}
    double lower_bound{0.0};        // max_k Cap_k^{1/k}
    int alphabet{0};                // |Q|, the trivial upper bound
    bool lower_bounds_only{true};   // no upper bound beyond |Q| is certified
};

CapReport cap_report(const GaussDiagram& m, const MultiQuandle& q, int kmax,
                     const MessagePolicy& policy, int max_vertices = 512);

}  // namespace inca
