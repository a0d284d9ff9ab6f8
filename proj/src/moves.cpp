#include "inca/moves.hpp"

#include <algorithm>
#include <set>

#include "inca/errors.hpp"

namespace inca {
namespace {

[[noreturn]] void refuse(const std::string& why) { throw not_applicable(why); }

// Contraction of a bare edge. Non-wrap edges merge head into tail's position;
// the cycle wrap edge merges old positions n-1 and 0 at position 0.
struct ContractMap {
    int comp;
    int n;
    int tail;
    bool wrap;

    static ContractMap for_edge(const GaussDiagram& m, EdgeRef e) {
        const Component& c = m.component(e.component);
        bool wrap = c.kind == ComponentKind::Cycle && e.tail == c.size - 1;
        return {e.component, c.size, e.tail, wrap};
    }

    int vertex(int p) const {
        if (wrap) return p == n - 1 ? 0 : p;
        if (p <= tail) return p;
        return p - 1;  // head (tail+1) lands on tail
    }
    // -1 for the contracted edge itself.
    int edge(int j) const {
        if (wrap) return j == n - 1 ? -1 : j;
        if (j < tail) return j;
        if (j == tail) return -1;
        return j - 1;
    }
};

// Splitting vertex p: the fresh inert vertex sits at p (before) or p+1 (after).
struct SplitMap {
    int comp;
    int pos;
    bool after;

    int new_vertex() const { return after ? pos + 1 : pos; }
    int vertex(int q) const {
        int cut = after ? pos + 1 : pos;
        return q >= cut ? q + 1 : q;
    }
    int edge(int j) const { return j >= pos ? j + 1 : j; }
    int new_edge() const { return pos; }
};

GaussDiagram contract(const GaussDiagram& m, EdgeRef e) {
    ContractMap cm = ContractMap::for_edge(m, e);
    GaussDiagram out;
    for (int ci = 0; ci < m.component_count(); ++ci) {
        const Component& c = m.component(ci);
        out.add_component(c.name, c.kind, ci == cm.comp ? c.size - 1 : c.size);
    }
    auto map_v = [&](VertexRef v) -> VertexRef {
        if (v.component != cm.comp) return v;
        return {v.component, cm.vertex(v.position)};
    };
    for (const auto& it : m.interactions()) {
        EdgeRef edge = it.edge;
        if (edge.component == cm.comp) edge.tail = cm.edge(edge.tail);
        out.add_interaction({edge, map_v(it.agent), it.sign});
    }
    for (const auto& v : m.marks()) out.add_mark(map_v(v));
    return out;
}

GaussDiagram split(const GaussDiagram& m, VertexRef v, bool after) {
    SplitMap sm{v.component, v.position, after};
    GaussDiagram out;
    for (int ci = 0; ci < m.component_count(); ++ci) {
        const Component& c = m.component(ci);
        out.add_component(c.name, c.kind, ci == v.component ? c.size + 1 : c.size);
    }
    auto map_v = [&](VertexRef x) -> VertexRef {
        if (x.component != v.component) return x;
        return {x.component, sm.vertex(x.position)};
    };
    for (const auto& it : m.interactions()) {
        EdgeRef edge = it.edge;
        if (edge.component == v.component) edge.tail = sm.edge(edge.tail);
        out.add_interaction({edge, map_v(it.agent), it.sign});
    }
    for (const auto& mk : m.marks()) out.add_mark(map_v(mk));
    return out;
}

void require_edge(const GaussDiagram& m, EdgeRef e) {
    if (!m.has_edge(e)) refuse("edge " + to_string(e, m) + " does not exist");
}
void require_vertex(const GaussDiagram& m, VertexRef v) {
    if (!m.has_vertex(v)) refuse("vertex " + to_string(v, m) + " does not exist");
}

struct R3Sites {
    VertexRef b, bp, c;
    Sign s;
    std::vector<Interaction> from;  // interactions being re-agented (on f or g edges)
    std::vector<EdgeRef> partner;   // the paired edge for each entry
};

// Shared pattern check for both R3 directions. In the slide direction the
// moving vertex is b = tail(e) and every f in phi(b) must have its successor g
// under (c, s); in the unslide direction the roles mirror along the strand.
R3Sites r3_sites(const GaussDiagram& m, EdgeRef e, bool slide) {
    require_edge(m, e);
    const Interaction* pivot = m.interaction_on(e);
    if (!pivot) refuse("pivot edge " + to_string(e, m) + " is bare");
    VertexRef b = m.tail_of(e), bp = m.head_of(e), c = pivot->agent;
    if (b == bp) refuse("pivot edge is a loop");
    if (c == b || c == bp) refuse("pivot agent coincides with a pivot endpoint");

    VertexRef mover = slide ? b : bp;    // loses its actions
    VertexRef target = slide ? bp : b;   // acquires them
    if (m.marked(mover)) refuse(to_string(mover, m) + " is marked");
    if (!m.inert(target)) refuse(to_string(target, m) + " is not inert");

    auto moving = m.actions_of(mover);
    if (moving.empty()) refuse(to_string(mover, m) + " has no actions to slide");

    R3Sites sites{b, bp, c, pivot->sign, {}, {}};
    std::set<EdgeRef> used{e};
    for (const auto& f : moving) {
        VertexRef y = slide ? m.head_of(f.edge) : m.tail_of(f.edge);
        std::optional<EdgeRef> g = slide ? m.out_edge(y) : m.in_edge(y);
        if (!g) refuse("strand through " + to_string(y, m) + " ends before the partner edge");
        const Interaction* gi = m.interaction_on(*g);
        if (!gi || gi->agent != c || gi->sign != pivot->sign)
            refuse("partner edge " + to_string(*g, m) + " does not carry the pivot agent/sign");
        if (!m.inert(y)) refuse("strand vertex " + to_string(y, m) + " is not inert");
        if (!used.insert(f.edge).second || !used.insert(*g).second)
            refuse("move sites overlap");
        sites.from.push_back(f);
        sites.partner.push_back(*g);
    }
    return sites;
}

GaussDiagram apply_r3(const GaussDiagram& m, EdgeRef e, bool slide) {
    R3Sites sites = r3_sites(m, e, slide);
    GaussDiagram out = m;
    for (std::size_t i = 0; i < sites.from.size(); ++i) {
        const Interaction& moving = sites.from[i];  // action of the mover (b or b')
        EdgeRef partner = sites.partner[i];         // the paired edge under (c, s)
        if (slide) {
            // f <- (c, s); g <- (b', t_f)
            out.set_interaction(moving.edge, sites.c, sites.s);
            out.set_interaction(partner, sites.bp, moving.sign);
        } else {
            // f <- (b, t_g); g <- (c, s)
            out.set_interaction(partner, sites.b, moving.sign);
            out.set_interaction(moving.edge, sites.c, sites.s);
        }
    }
    return out;
}

}  // namespace

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Remove: return "r1-remove";
        case MoveKind::R1Add: return "r1-add";
        case MoveKind::R2Cancel: return "r2-cancel";
        case MoveKind::R2Insert: return "r2-insert";
        case MoveKind::R3Slide: return "r3-slide";
        case MoveKind::R3Unslide: return "r3-unslide";
        case MoveKind::Destab: return "destabilize";
        case MoveKind::Stab: return "stabilize";
        case MoveKind::FalseDestab: return "false-destabilize";
        case MoveKind::FalseStab: return "false-stabilize";
    }
    return "?";
}

std::string describe(const MoveInstance& inst, const GaussDiagram& m) {
    std::string out = move_kind_name(inst.kind);
    switch (inst.kind) {
        case MoveKind::R1Remove:
        case MoveKind::Destab:
        case MoveKind::FalseDestab:
        case MoveKind::R3Slide:
        case MoveKind::R3Unslide:
            out += " at " + to_string(inst.edge, m);
            break;
        case MoveKind::R1Add:
            out += " at " + to_string(inst.edge, m) + " by " + to_string(inst.agent, m) + " " +
                   sign_char(inst.sign);
            break;
        case MoveKind::R2Cancel:
            out += " at " + to_string(inst.vertex, m);
            break;
        case MoveKind::R2Insert:
            out += " at " + to_string(inst.vertex, m) + " by " + to_string(inst.agent, m) + " " +
                   sign_char(inst.sign);
            break;
        case MoveKind::Stab:
        case MoveKind::FalseStab:
            out += std::string(" at ") + to_string(inst.vertex, m) +
                   (inst.aux ? " (after)" : " (before)");
            break;
    }
    return out;
}

GaussDiagram apply(const GaussDiagram& m, const MoveInstance& inst) {
    switch (inst.kind) {
        case MoveKind::R1Remove: {
            require_edge(m, inst.edge);
            const Interaction* it = m.interaction_on(inst.edge);
            if (!it) refuse("edge " + to_string(inst.edge, m) + " is bare");
            if (it->agent != m.tail_of(inst.edge) && it->agent != m.head_of(inst.edge))
                refuse("interaction on " + to_string(inst.edge, m) + " is not a kink");
            GaussDiagram out = m;
            out.clear_interaction(inst.edge);
            return out;
        }
        case MoveKind::R1Add: {
            require_edge(m, inst.edge);
            if (m.interaction_on(inst.edge))
                refuse("edge " + to_string(inst.edge, m) + " already carries an interaction");
            if (inst.agent != m.tail_of(inst.edge) && inst.agent != m.head_of(inst.edge))
                refuse("kink agent must be an endpoint of the edge");
            GaussDiagram out = m;
            out.add_interaction({inst.edge, inst.agent, inst.sign});
            return out;
        }
        case MoveKind::R2Cancel: {
            require_vertex(m, inst.vertex);
            auto e1 = m.in_edge(inst.vertex), e2 = m.out_edge(inst.vertex);
            if (!e1 || !e2 || *e1 == *e2) refuse("vertex lacks two distinct incident edges");
            const Interaction* i1 = m.interaction_on(*e1);
            const Interaction* i2 = m.interaction_on(*e2);
            if (!i1 || !i2) refuse("incident edges are not both interactions");
            if (i1->agent != i2->agent) refuse("incident interactions have different agents");
            if (i1->sign != negate(i2->sign)) refuse("incident interactions have equal signs");
            if (m.acts(inst.vertex) || m.marked(inst.vertex))
                refuse("central vertex is in the agent set");
            GaussDiagram out = m;
            out.clear_interaction(*e1);
            out.clear_interaction(*e2);
            return out;
        }
        case MoveKind::R2Insert: {
            require_vertex(m, inst.vertex);
            require_vertex(m, inst.agent);
            auto e1 = m.in_edge(inst.vertex), e2 = m.out_edge(inst.vertex);
            if (!e1 || !e2 || *e1 == *e2) refuse("vertex lacks two distinct incident edges");
            if (m.interaction_on(*e1) || m.interaction_on(*e2))
                refuse("incident edges are not both bare");
            if (m.acts(inst.vertex) || m.marked(inst.vertex))
                refuse("central vertex is in the agent set");
            if (inst.agent == inst.vertex) refuse("agent cannot be the central vertex");
            GaussDiagram out = m;
            out.add_interaction({*e1, inst.agent, inst.sign});
            out.add_interaction({*e2, inst.agent, negate(inst.sign)});
            return out;
        }
        case MoveKind::R3Slide:
            return apply_r3(m, inst.edge, true);
        case MoveKind::R3Unslide:
            return apply_r3(m, inst.edge, false);
        case MoveKind::Destab: {
            require_edge(m, inst.edge);
            if (m.interaction_on(inst.edge))
                refuse("edge " + to_string(inst.edge, m) + " carries an interaction");
            VertexRef tail = m.tail_of(inst.edge), head = m.head_of(inst.edge);
            if (tail == head) refuse("loop edges cannot be contracted");
            VertexRef dropped = inst.aux ? head : tail;
            if (!m.inert(dropped)) refuse("dropped endpoint " + to_string(dropped, m) + " is not inert");
            return contract(m, inst.edge);
        }
        case MoveKind::Stab: {
            require_vertex(m, inst.vertex);
            return split(m, inst.vertex, inst.aux);
        }
        case MoveKind::FalseDestab: {
            require_edge(m, inst.edge);
            if (m.interaction_on(inst.edge))
                refuse("edge " + to_string(inst.edge, m) + " carries an interaction");
            if (m.tail_of(inst.edge) == m.head_of(inst.edge)) refuse("loop edges cannot be contracted");
            return contract(m, inst.edge);
        }
        case MoveKind::FalseStab: {
            require_vertex(m, inst.vertex);
            for (const auto& e : inst.moved) {
                const Interaction* it = m.interaction_on(e);
                if (!it || it->agent != inst.vertex)
                    refuse("moved edge " + to_string(e, m) + " is not an action of the split vertex");
            }
            if (inst.unmark_old && !m.marked(inst.vertex))
                refuse("split vertex carries no mark to redistribute");
            GaussDiagram out = split(m, inst.vertex, inst.aux);
            SplitMap sm{inst.vertex.component, inst.vertex.position, inst.aux};
            VertexRef fresh{inst.vertex.component, sm.new_vertex()};
            VertexRef old{inst.vertex.component, sm.vertex(inst.vertex.position)};
            for (const auto& e : inst.moved) {
                EdgeRef ne = e;
                if (ne.component == inst.vertex.component) ne.tail = sm.edge(ne.tail);
                const Interaction* it = out.interaction_on(ne);
                out.set_interaction(ne, fresh, it->sign);
            }
            if (inst.unmark_old) out.remove_mark(old);
            if (inst.mark_new) out.add_mark(fresh);
            return out;
        }
    }
    refuse("unknown move kind");
}

MoveInstance inverse_of(const GaussDiagram& m, const MoveInstance& inst) {
    MoveInstance inv;
    switch (inst.kind) {
        case MoveKind::R1Remove: {
            const Interaction* it = m.interaction_on(inst.edge);
            if (!it) refuse("cannot invert: edge is bare");
            inv.kind = MoveKind::R1Add;
            inv.edge = inst.edge;
            inv.agent = it->agent;
            inv.sign = it->sign;
            return inv;
        }
        case MoveKind::R1Add:
            inv.kind = MoveKind::R1Remove;
            inv.edge = inst.edge;
            return inv;
        case MoveKind::R2Cancel: {
            auto e1 = m.in_edge(inst.vertex);
            const Interaction* i1 = e1 ? m.interaction_on(*e1) : nullptr;
            if (!i1) refuse("cannot invert: no in-edge interaction");
            inv.kind = MoveKind::R2Insert;
            inv.vertex = inst.vertex;
            inv.agent = i1->agent;
            inv.sign = i1->sign;
            return inv;
        }
        case MoveKind::R2Insert:
            inv.kind = MoveKind::R2Cancel;
            inv.vertex = inst.vertex;
            return inv;
        case MoveKind::R3Slide:
            inv.kind = MoveKind::R3Unslide;
            inv.edge = inst.edge;
            return inv;
        case MoveKind::R3Unslide:
            inv.kind = MoveKind::R3Slide;
            inv.edge = inst.edge;
            return inv;
        case MoveKind::Destab: {
            VertexRef kept = inst.aux ? m.tail_of(inst.edge) : m.head_of(inst.edge);
            inv.kind = MoveKind::Stab;
            inv.vertex = map_vertex(m, inst, kept);
            inv.aux = inst.aux;  // dropped head -> reinsert after, dropped tail -> before
            return inv;
        }
        case MoveKind::Stab:
            inv.kind = MoveKind::Destab;
            inv.edge = EdgeRef{inst.vertex.component, inst.vertex.position};
            inv.aux = inst.aux;
            return inv;
        case MoveKind::FalseDestab: {
            VertexRef tail = m.tail_of(inst.edge), head = m.head_of(inst.edge);
            inv.kind = MoveKind::FalseStab;
            inv.vertex = map_vertex(m, inst, tail);
            inv.aux = true;  // recreate the head after the merged vertex
            ContractMap cm = ContractMap::for_edge(m, inst.edge);
            for (const auto& it : m.actions_of(head)) {
                EdgeRef e = it.edge;
                if (e.component == cm.comp) e.tail = cm.edge(e.tail);
                inv.moved.push_back(e);
            }
            std::sort(inv.moved.begin(), inv.moved.end());
            inv.mark_new = m.marked(head);
            inv.unmark_old = m.marked(head) && !m.marked(tail);
            return inv;
        }
        case MoveKind::FalseStab:
            inv.kind = MoveKind::FalseDestab;
            inv.edge = EdgeRef{inst.vertex.component, inst.vertex.position};
            return inv;
    }
    refuse("unknown move kind");
}

VertexRef map_vertex(const GaussDiagram& m, const MoveInstance& inst, VertexRef v) {
    switch (inst.kind) {
        case MoveKind::Destab:
        case MoveKind::FalseDestab: {
            ContractMap cm = ContractMap::for_edge(m, inst.edge);
            if (v.component != cm.comp) return v;
            return {v.component, cm.vertex(v.position)};
        }
        case MoveKind::Stab:
        case MoveKind::FalseStab: {
            SplitMap sm{inst.vertex.component, inst.vertex.position, inst.aux};
            if (v.component != inst.vertex.component) return v;
            return {v.component, sm.vertex(v.position)};
        }
        default:
            return v;
    }
}

std::set<MoveKind> all_move_kinds(bool stable, bool use_false) {
    std::set<MoveKind> kinds{MoveKind::R1Remove, MoveKind::R1Add,   MoveKind::R2Cancel,
                             MoveKind::R2Insert, MoveKind::R3Slide, MoveKind::R3Unslide};
    if (stable) {
        kinds.insert(MoveKind::Destab);
        kinds.insert(MoveKind::Stab);
    }
    if (use_false) {
        kinds.insert(MoveKind::FalseDestab);
        kinds.insert(MoveKind::FalseStab);
    }
    return kinds;
}

std::vector<MoveInstance> enumerate_moves(const GaussDiagram& m, const std::set<MoveKind>& kinds,
                                          bool include_adds) {
    std::vector<MoveInstance> out;
    auto wanted = [&](MoveKind k) { return kinds.count(k) > 0; };
    auto applicable = [&](const MoveInstance& inst) {
        try {
            apply(m, inst);
            return true;
        } catch (const not_applicable&) {
            return false;
        }
    };
    auto push_if = [&](MoveInstance inst) {
        if (applicable(inst)) out.push_back(std::move(inst));
    };

    std::vector<VertexRef> vertices;
    for (int ci = 0; ci < m.component_count(); ++ci)
        for (int p = 0; p < m.component(ci).size; ++p) vertices.push_back({ci, p});
    std::vector<EdgeRef> edges;
    for (int ci = 0; ci < m.component_count(); ++ci)
        for (int j = 0; j < m.component(ci).edge_count(); ++j) edges.push_back({ci, j});

    if (wanted(MoveKind::R1Remove))
        for (const auto& it : m.interactions())
            push_if({.kind = MoveKind::R1Remove, .edge = it.edge});

    if (wanted(MoveKind::R1Add) && include_adds)
        for (const auto& e : edges) {
            if (m.interaction_on(e)) continue;
            std::vector<VertexRef> ends{m.tail_of(e)};
            if (m.head_of(e) != m.tail_of(e)) ends.push_back(m.head_of(e));
            for (const auto& a : ends)
                for (Sign s : {Sign::Pos, Sign::Neg})
                    push_if({.kind = MoveKind::R1Add, .edge = e, .agent = a, .sign = s});
        }

    if (wanted(MoveKind::R2Cancel))
        for (const auto& v : vertices) push_if({.kind = MoveKind::R2Cancel, .vertex = v});

    if (wanted(MoveKind::R2Insert) && include_adds)
        for (const auto& b : vertices) {
            auto e1 = m.in_edge(b), e2 = m.out_edge(b);
            if (!e1 || !e2 || *e1 == *e2) continue;
            if (m.interaction_on(*e1) || m.interaction_on(*e2)) continue;
            if (m.acts(b) || m.marked(b)) continue;
            for (const auto& a : vertices) {
                if (a == b) continue;
                for (Sign s : {Sign::Pos, Sign::Neg})
                    push_if({.kind = MoveKind::R2Insert, .vertex = b, .agent = a, .sign = s});
            }
        }

    if (wanted(MoveKind::R3Slide))
        for (const auto& it : m.interactions()) push_if({.kind = MoveKind::R3Slide, .edge = it.edge});
    if (wanted(MoveKind::R3Unslide))
        for (const auto& it : m.interactions())
            push_if({.kind = MoveKind::R3Unslide, .edge = it.edge});

    if (wanted(MoveKind::Destab))
        for (const auto& e : edges) {
            if (m.interaction_on(e)) continue;
            VertexRef tail = m.tail_of(e), head = m.head_of(e);
            if (tail == head) continue;
            if (m.inert(head))
                push_if({.kind = MoveKind::Destab, .edge = e, .aux = true});
            else if (m.inert(tail))
                push_if({.kind = MoveKind::Destab, .edge = e, .aux = false});
        }

    if (wanted(MoveKind::Stab) && include_adds)
        for (const auto& v : vertices)
            for (bool after : {false, true})
                push_if({.kind = MoveKind::Stab, .vertex = v, .aux = after});

    if (wanted(MoveKind::FalseDestab))
        for (const auto& e : edges)
            push_if({.kind = MoveKind::FalseDestab, .edge = e});

    if (wanted(MoveKind::FalseStab) && include_adds)
        for (const auto& v : vertices)
            for (bool after : {false, true}) {
                push_if({.kind = MoveKind::FalseStab, .vertex = v, .aux = after});
                auto acts = m.actions_of(v);
                if (!acts.empty()) {
                    MoveInstance inst{.kind = MoveKind::FalseStab, .vertex = v, .aux = after};
                    for (const auto& it : acts) inst.moved.push_back(it.edge);
                    std::sort(inst.moved.begin(), inst.moved.end());
                    inst.mark_new = m.marked(v);
                    inst.unmark_old = m.marked(v);
                    push_if(std::move(inst));
                }
            }

    return out;
}

GaussDiagram r1_remove(const GaussDiagram& m, EdgeRef e) {
    return apply(m, {.kind = MoveKind::R1Remove, .edge = e});
}
GaussDiagram r1_add(const GaussDiagram& m, EdgeRef e, VertexRef agent, Sign sign) {
    return apply(m, {.kind = MoveKind::R1Add, .edge = e, .agent = agent, .sign = sign});
}
GaussDiagram r2_cancel(const GaussDiagram& m, VertexRef b) {
    return apply(m, {.kind = MoveKind::R2Cancel, .vertex = b});
}
GaussDiagram r2_insert(const GaussDiagram& m, VertexRef b, VertexRef agent, Sign sign) {
    return apply(m, {.kind = MoveKind::R2Insert, .vertex = b, .agent = agent, .sign = sign});
}
GaussDiagram r3_slide(const GaussDiagram& m, VertexRef c, EdgeRef e) {
    const Interaction* it = m.has_edge(e) ? m.interaction_on(e) : nullptr;
    if (!it || it->agent != c) refuse("pivot edge does not carry agent " + to_string(c, m));
    return apply(m, {.kind = MoveKind::R3Slide, .edge = e});
}
GaussDiagram r3_unslide(const GaussDiagram& m, VertexRef c, EdgeRef e) {
    const Interaction* it = m.has_edge(e) ? m.interaction_on(e) : nullptr;
    if (!it || it->agent != c) refuse("pivot edge does not carry agent " + to_string(c, m));
    return apply(m, {.kind = MoveKind::R3Unslide, .edge = e});
}
GaussDiagram destabilize(const GaussDiagram& m, EdgeRef e) {
    if (!m.has_edge(e)) refuse("edge " + to_string(e, m) + " does not exist");
    VertexRef tail = m.tail_of(e), head = m.head_of(e);
    bool drop_head = m.inert(head);
    if (!drop_head && !m.inert(tail)) refuse("neither endpoint of " + to_string(e, m) + " is inert");
    return apply(m, {.kind = MoveKind::Destab, .edge = e, .aux = drop_head});
}
GaussDiagram stabilize(const GaussDiagram& m, VertexRef v, bool after) {
    return apply(m, {.kind = MoveKind::Stab, .vertex = v, .aux = after});
}
GaussDiagram false_destabilize(const GaussDiagram& m, EdgeRef e) {
    return apply(m, {.kind = MoveKind::FalseDestab, .edge = e});
}

}  // namespace inca
