#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inca {

// Direction tag on an interaction (the arrow on a Gauss-diagram edge).
enum class Sign : std::uint8_t { Pos, Neg };

inline Sign negate(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }
inline char sign_char(Sign s) { return s == Sign::Pos ? '+' : '-'; }

enum class ComponentKind : std::uint8_t { Path, Cycle };

// A strand of the underlying graph. A path of size n has vertices 0..n-1 and
// edges 0..n-2; a cycle of size n has edges 0..n-1 where edge i runs from
// vertex i to vertex (i+1) mod n. A cycle of size 1 has a single loop edge.
struct Component {
    std::string name;
    ComponentKind kind{ComponentKind::Cycle};
    int size{1};

    int edge_count() const {
        return kind == ComponentKind::Path ? size - 1 : size;
    }
    int head_of(int tail) const {
        return kind == ComponentKind::Cycle ? (tail + 1) % size : tail + 1;
    }

    bool operator==(const Component&) const = default;
};

// Vertices and edges are addressed by component index plus position. Component
// indices refer to the owning diagram's component list.
struct VertexRef {
    std::int32_t component{0};
    std::int32_t position{0};
    auto operator<=>(const VertexRef&) const = default;
};

struct EdgeRef {
    std::int32_t component{0};
    std::int32_t tail{0};
    auto operator<=>(const EdgeRef&) const = default;
};

// A single signed action of an agent vertex on an edge (one crossing).
struct Interaction {
    EdgeRef edge;
    VertexRef agent;
    Sign sign{Sign::Pos};
    auto operator<=>(const Interaction&) const = default;
};

// The combinatorial presentation of an Inca foam: strand components, at most
// one interaction per edge, and an explicit set of marked agent vertices.
// Values are cheap to copy; every operation in the library takes diagrams by
// const reference and returns fresh values.
class GaussDiagram {
public:
    GaussDiagram() = default;

    int add_component(std::string name, ComponentKind kind, int size);

    // Builder-style mutation. set_interaction replaces any existing action on
    // the edge; add_interaction may create duplicates, which validate reports.
    void set_interaction(EdgeRef edge, VertexRef agent, Sign sign);
    void add_interaction(const Interaction& it);
    bool clear_interaction(EdgeRef edge);
    void add_mark(VertexRef v);
    bool remove_mark(VertexRef v);
    void clear_marks() { marks_.clear(); }

    const std::vector<Component>& components() const { return components_; }
    const std::vector<Interaction>& interactions() const { return interactions_; }
    const std::vector<VertexRef>& marks() const { return marks_; }

    const Component& component(int index) const { return components_[index]; }
    int component_count() const { return static_cast<int>(components_.size()); }
    std::optional<int> component_index(const std::string& name) const;

    int vertex_count() const;
    int edge_count() const;
    int interaction_count() const { return static_cast<int>(interactions_.size()); }

    bool has_vertex(VertexRef v) const;
    bool has_edge(EdgeRef e) const;
    VertexRef head_of(EdgeRef e) const;
    VertexRef tail_of(EdgeRef e) const { return {e.component, e.tail}; }

    // In/out edges of a vertex along its strand; empty at path endpoints.
    std::optional<EdgeRef> out_edge(VertexRef v) const;
    std::optional<EdgeRef> in_edge(VertexRef v) const;

    const Interaction* interaction_on(EdgeRef e) const;
    std::vector<Interaction> actions_of(VertexRef agent) const;
    bool acts(VertexRef v) const;
    bool marked(VertexRef v) const;
    // "Inert" = outside the agent set entirely: not acting and unmarked.
    bool inert(VertexRef v) const { return !acts(v) && !marked(v); }

    bool operator==(const GaussDiagram&) const = default;

private:
    std::vector<Component> components_;
    std::vector<Interaction> interactions_;  // kept sorted by edge
    std::vector<VertexRef> marks_;           // kept sorted, unique
};

// Structural well-formedness; one message per violation, empty means valid.
std::vector<std::string> validate(const GaussDiagram& m);
bool is_valid(const GaussDiagram& m);
// Throws invalid_diagram when validate(m) is nonempty.
void require_valid(const GaussDiagram& m);

// Vertices acting on at least one edge, sorted.
std::vector<VertexRef> support(const GaussDiagram& m);
// support union explicit marks: the full agent set.
std::vector<VertexRef> agent_set(const GaussDiagram& m);

// The diagram with the same graph and marks but empty interaction function.
GaussDiagram trivial_on(const GaussDiagram& m);

std::string to_string(VertexRef v, const GaussDiagram& m);
std::string to_string(EdgeRef e, const GaussDiagram& m);

}  // namespace inca
