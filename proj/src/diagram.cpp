#include "inca/diagram.hpp"

#include <algorithm>
#include <set>

#include "inca/errors.hpp"

namespace inca {

int GaussDiagram::add_component(std::string name, ComponentKind kind, int size) {
    components_.push_back(Component{std::move(name), kind, size});
    return static_cast<int>(components_.size()) - 1;
}

void GaussDiagram::set_interaction(EdgeRef edge, VertexRef agent, Sign sign) {
    clear_interaction(edge);
    add_interaction(Interaction{edge, agent, sign});
}

void GaussDiagram::add_interaction(const Interaction& it) {
    auto pos = std::lower_bound(interactions_.begin(), interactions_.end(), it,
                                [](const Interaction& a, const Interaction& b) { return a.edge < b.edge; });
    interactions_.insert(pos, it);
}

bool GaussDiagram::clear_interaction(EdgeRef edge) {
    auto it = std::remove_if(interactions_.begin(), interactions_.end(),
                             [&](const Interaction& x) { return x.edge == edge; });
    bool removed = it != interactions_.end();
    interactions_.erase(it, interactions_.end());
    return removed;
}

void GaussDiagram::add_mark(VertexRef v) {
    auto pos = std::lower_bound(marks_.begin(), marks_.end(), v);
    if (pos == marks_.end() || *pos != v) marks_.insert(pos, v);
}

bool GaussDiagram::remove_mark(VertexRef v) {
    auto pos = std::lower_bound(marks_.begin(), marks_.end(), v);
    if (pos != marks_.end() && *pos == v) {
        marks_.erase(pos);
        return true;
    }
    return false;
}

std::optional<int> GaussDiagram::component_index(const std::string& name) const {
    for (int i = 0; i < component_count(); ++i)
        if (components_[i].name == name) return i;
    return std::nullopt;
}

int GaussDiagram::vertex_count() const {
    int n = 0;
    for (const auto& c : components_) n += c.size;
    return n;
}

int GaussDiagram::edge_count() const {
    int n = 0;
    for (const auto& c : components_) n += c.edge_count();
    return n;
}

bool GaussDiagram::has_vertex(VertexRef v) const {
    return v.component >= 0 && v.component < component_count() && v.position >= 0 &&
           v.position < components_[v.component].size;
}

bool GaussDiagram::has_edge(EdgeRef e) const {
    return e.component >= 0 && e.component < component_count() && e.tail >= 0 &&
           e.tail < components_[e.component].edge_count();
}

VertexRef GaussDiagram::head_of(EdgeRef e) const {
    return {e.component, components_[e.component].head_of(e.tail)};
}

std::optional<EdgeRef> GaussDiagram::out_edge(VertexRef v) const {
    const Component& c = components_[v.component];
    if (c.kind == ComponentKind::Path && v.position == c.size - 1) return std::nullopt;
    return EdgeRef{v.component, v.position};
}

std::optional<EdgeRef> GaussDiagram::in_edge(VertexRef v) const {
    const Component& c = components_[v.component];
    if (c.kind == ComponentKind::Path) {
        if (v.position == 0) return std::nullopt;
        return EdgeRef{v.component, v.position - 1};
    }
    return EdgeRef{v.component, (v.position + c.size - 1) % c.size};
}

const Interaction* GaussDiagram::interaction_on(EdgeRef e) const {
    auto it = std::lower_bound(interactions_.begin(), interactions_.end(), e,
                               [](const Interaction& a, const EdgeRef& b) { return a.edge < b; });
    if (it != interactions_.end() && it->edge == e) return &*it;
    return nullptr;
}

std::vector<Interaction> GaussDiagram::actions_of(VertexRef agent) const {
    std::vector<Interaction> out;
    for (const auto& it : interactions_)
        if (it.agent == agent) out.push_back(it);
    return out;
}

bool GaussDiagram::acts(VertexRef v) const {
    for (const auto& it : interactions_)
        if (it.agent == v) return true;
    return false;
}

bool GaussDiagram::marked(VertexRef v) const {
    return std::binary_search(marks_.begin(), marks_.end(), v);
}

std::string to_string(VertexRef v, const GaussDiagram& m) {
    std::string comp = v.component >= 0 && v.component < m.component_count()
                           ? m.component(v.component).name
                           : "?" + std::to_string(v.component);
    return comp + "." + std::to_string(v.position);
}

std::string to_string(EdgeRef e, const GaussDiagram& m) {
    std::string comp = e.component >= 0 && e.component < m.component_count()
                           ? m.component(e.component).name
                           : "?" + std::to_string(e.component);
    return comp + "[" + std::to_string(e.tail) + "]";
}

std::vector<std::string> validate(const GaussDiagram& m) {
    std::vector<std::string> out;
    std::set<std::string> names;
    for (int i = 0; i < m.component_count(); ++i) {
        const Component& c = m.component(i);
        if (c.size < 1)
            out.push_back("component " + c.name + " has non-positive size " + std::to_string(c.size));
        if (c.name.empty())
            out.push_back("component " + std::to_string(i) + " has an empty name");
        if (!names.insert(c.name).second)
            out.push_back("duplicate component name " + c.name);
    }

    std::set<EdgeRef> seen_edges;
    for (const auto& it : m.interactions()) {
        if (!m.has_edge(it.edge)) {
            out.push_back("interaction references missing edge " + to_string(it.edge, m));
            continue;
        }
        if (!m.has_vertex(it.agent))
            out.push_back("interaction on " + to_string(it.edge, m) + " references missing agent " +
                          to_string(it.agent, m));
        if (!seen_edges.insert(it.edge).second)
            out.push_back("edge " + to_string(it.edge, m) + " carries more than one interaction");
    }

    for (const auto& v : m.marks())
        if (!m.has_vertex(v)) out.push_back("mark references missing vertex " + to_string(v, m));

    return out;
}

bool is_valid(const GaussDiagram& m) { return validate(m).empty(); }

void require_valid(const GaussDiagram& m) {
    auto violations = validate(m);
    if (!violations.empty()) throw invalid_diagram(violations.front());
}

std::vector<VertexRef> support(const GaussDiagram& m) {
    std::set<VertexRef> agents;
    for (const auto& it : m.interactions()) agents.insert(it.agent);
    return {agents.begin(), agents.end()};
}

std::vector<VertexRef> agent_set(const GaussDiagram& m) {
    std::set<VertexRef> agents;
    for (const auto& it : m.interactions()) agents.insert(it.agent);
    agents.insert(m.marks().begin(), m.marks().end());
    return {agents.begin(), agents.end()};
}

GaussDiagram trivial_on(const GaussDiagram& m) {
    GaussDiagram out;
    for (const auto& c : m.components()) out.add_component(c.name, c.kind, c.size);
    for (const auto& v : m.marks()) out.add_mark(v);
    return out;
}

}  // namespace inca
