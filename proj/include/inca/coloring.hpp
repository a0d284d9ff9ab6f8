#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "inca/diagram.hpp"
#include "inca/quandle.hpp"

namespace inca {

// Number of pairs (op assignment: acting agents -> ops, color assignment:
// vertices -> Q) satisfying every interaction (head = tail > agent for Pos,
// the registered inverse for Neg) and every bare edge (head = tail).
long long count_colorings(const GaussDiagram& m, const MultiQuandle& q);

// Full enumeration; the callback receives colors indexed by vertex id (see
// vertex_ids) and one op index per acting agent (support order). Returning
// false stops the enumeration. Throws resource_limit past `max_steps` search
// nodes.
struct ColoringView {
    const std::vector<int>& colors;
    const std::vector<int>& agent_ops;
};
void for_each_coloring(const GaussDiagram& m, const MultiQuandle& q,
                       const std::function<bool(const ColoringView&)>& fn,
                       long long max_steps = 50'000'000);

// Dense vertex numbering used by the coloring callbacks: components in order,
// positions within.
std::vector<int> vertex_id_offsets(const GaussDiagram& m);
int vertex_id(const GaussDiagram& m, VertexRef v);

// The fundamental multi-quandle presentation read off the canonical form:
// one generator per vertex, one op symbol per acting agent, one relation per
// interaction plus one equality per bare edge.
struct QuandlePresentation {
    struct Relation {
        int head;  // generator index
        int tail;
        bool bare;
        int op;  // op symbol index, -1 for bare
        int agent;  // generator index of the agent, -1 for bare
        Sign sign;
    };
    std::vector<std::string> generators;
    std::vector<std::string> op_symbols;
    std::vector<Relation> relations;

    std::string text() const;
};

QuandlePresentation quandle_presentation(const GaussDiagram& m);

}  // namespace inca
