#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inca/diagram.hpp"

namespace inca {

enum class MoveKind {
    R1Remove,
    R1Add,
    R2Cancel,
    R2Insert,
    R3Slide,
    R3Unslide,
    Destab,
    Stab,
    FalseDestab,
    FalseStab,
};

const char* move_kind_name(MoveKind k);

// A fully located local rewrite. Field use is kind-specific:
//   R1Remove           edge
//   R1Add              edge, agent (tail or head of edge), sign
//   R2Cancel           vertex (the strand vertex between the pair)
//   R2Insert           vertex, agent, sign (sign of the in-edge interaction)
//   R3Slide/R3Unslide  edge (the pivot edge b->b')
//   Destab             edge, aux (true: drop head, false: drop tail)
//   Stab               vertex, aux (true: insert after, false: before)
//   FalseDestab        edge
//   FalseStab          vertex, aux, moved (actions handed to the new vertex),
//                      mark_new / unmark_old (mark redistribution)
struct MoveInstance {
    MoveKind kind{MoveKind::R1Remove};
    EdgeRef edge{};
    VertexRef vertex{};
    VertexRef agent{};
    Sign sign{Sign::Pos};
    bool aux{false};
    std::vector<EdgeRef> moved;
    bool mark_new{false};
    bool unmark_old{false};

    bool operator==(const MoveInstance&) const = default;
};

std::string describe(const MoveInstance& inst, const GaussDiagram& m);

// Applies the rewrite; throws not_applicable when the site precondition fails.
GaussDiagram apply(const GaussDiagram& m, const MoveInstance& inst);

// The instance undoing `inst`, expressed against apply(m, inst). Applying both
// returns a diagram with m's canonical code.
MoveInstance inverse_of(const GaussDiagram& m, const MoveInstance& inst);

// Forward image of a vertex under the rewrite (vertices merge under
// contractions and shift under splits); never empty for valid inputs.
VertexRef map_vertex(const GaussDiagram& m, const MoveInstance& inst, VertexRef v);

// All applicable instances of the requested kinds. Adding kinds (R1Add,
// R2Insert, Stab, FalseStab) enumerate over sites present in m and are listed
// only when include_adds is set.
std::vector<MoveInstance> enumerate_moves(const GaussDiagram& m, const std::set<MoveKind>& kinds,
                                          bool include_adds = true);

std::set<MoveKind> all_move_kinds(bool stable, bool use_false);

// The named rewrites. Thin wrappers over apply() addressed by site.
GaussDiagram r1_remove(const GaussDiagram& m, EdgeRef e);
GaussDiagram r1_add(const GaussDiagram& m, EdgeRef e, VertexRef agent, Sign sign);
GaussDiagram r2_cancel(const GaussDiagram& m, VertexRef b);
GaussDiagram r2_insert(const GaussDiagram& m, VertexRef b, VertexRef agent, Sign sign);
GaussDiagram r3_slide(const GaussDiagram& m, VertexRef c, EdgeRef e);
GaussDiagram r3_unslide(const GaussDiagram& m, VertexRef c, EdgeRef e);
GaussDiagram destabilize(const GaussDiagram& m, EdgeRef e);
GaussDiagram stabilize(const GaussDiagram& m, VertexRef v, bool after);
GaussDiagram false_destabilize(const GaussDiagram& m, EdgeRef e);

}  // namespace inca
