#pragma once

#include <string>
#include <vector>

#include "inca/diagram.hpp"

namespace inca {

// Gauss code of the underlying w-tangle: contract bare edges exhaustively
// (false destabilization to a fixpoint), canonicalize, then read off each
// component's cyclic/linear sequence of (agent, sign) labels.
struct WCode {
    struct Entry {
        VertexRef agent;  // vertex of the canonical fixpoint diagram
        Sign sign;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<ComponentKind> kinds;
    std::vector<std::vector<Entry>> per_component;
    std::string text;

    bool operator==(const WCode& o) const { return text == o.text; }
};

WCode w_code(const GaussDiagram& m);

}  // namespace inca
