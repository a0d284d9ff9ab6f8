#pragma once

#include <string>
#include <vector>

#include "inca/diagram.hpp"

namespace inca {

enum class LinkingVariant { Full, Unframed, Reduced, ReducedUnframed };

const char* linking_variant_name(LinkingVariant v);
LinkingVariant linking_variant_from_name(const std::string& name);

// Per-vertex linking vectors: entry j of vectors[ci][p] counts the signed
// actions of vertex (ci,p) on edges of component j (Pos minus Neg). Unframed
// variants zero the own-component entry; reduced variants contract 2-valent
// zero-vector vertices and prune zero-vector leaves (never below one vertex
// per component).
struct LinkingGraph {
    LinkingVariant variant{LinkingVariant::Full};
    std::vector<Component> components;  // shape after reduction (names kept)
    std::vector<std::vector<std::vector<long long>>> vectors;  // [ci][pos] -> length-nu vector
    std::string code;

    bool operator==(const LinkingGraph& o) const { return code == o.code; }
};

LinkingGraph linking_graph(const GaussDiagram& m, LinkingVariant variant);

// Unframed per-vertex vector of a single vertex (certificate helper).
std::vector<long long> unframed_vector(const GaussDiagram& m, VertexRef v);

}  // namespace inca
