#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inca/diagram.hpp"

namespace inca {

// Text format, one declaration per line, '#' starts a comment:
//   inca v1
//   component <name> (cycle|path) <n>
//   interact <comp>[<i>] by <comp>.<j> (+|-)
//   agent <comp>.<j>
// Names match [A-Za-z_][A-Za-z0-9_]*. Throws parse_error with line/column on
// both syntax and semantic problems; never crashes on arbitrary bytes.
GaussDiagram parse_diagram(const std::string& text);

// Canonical document: components renamed/ordered canonically, declarations in
// a fixed order. parse(serialize(m)) always has m's canonical code.
std::string serialize(const GaussDiagram& m);

// Graphviz export: strand chains as solid arrows, interactions as dashed
// agent->edge arrows labeled with their sign.
std::string export_dot(const GaussDiagram& m);

struct RandomSpec {
    std::vector<std::pair<ComponentKind, int>> components;
    int interactions{0};
    int marks{0};
    std::uint64_t seed{0};
};

// Valid diagram sampled deterministically from the seed. Throws
// resource_limit when more interactions are requested than there are edges.
GaussDiagram random_diagram(const RandomSpec& spec);

}  // namespace inca
