#pragma once

#include <string>
#include <vector>

#include "inca/diagram.hpp"

namespace inca {

// Canonical form of a diagram under its symmetry group: component renaming,
// component reordering, and rotation of cycle components. Strand direction is
// semantic, so reflections/orientation reversal are deliberately excluded.
struct CanonicalResult {
    GaussDiagram diagram;  // components renamed c0, c1, ... in canonical order
    std::string code;      // equal iff the inputs are isomorphic under the group
    // vertex_map[old_component][old_position] -> vertex in `diagram`
    std::vector<std::vector<VertexRef>> vertex_map;
};

CanonicalResult canonical(const GaussDiagram& m);
std::string canonical_code(const GaussDiagram& m);

// The pair (G, marks) with interactions forgotten, in canonical form. Explicit
// marks only: R-moves never touch marks, so this is constant along R1/R2/R3.
struct UnderlyingGraph {
    GaussDiagram graph;
    std::string code;
    std::vector<std::pair<ComponentKind, int>> shape;  // sorted multiset of (kind, size)

    bool operator==(const UnderlyingGraph& o) const { return code == o.code; }
};

UnderlyingGraph underlying_graph(const GaussDiagram& m);

}  // namespace inca
