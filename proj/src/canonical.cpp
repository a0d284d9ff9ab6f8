#include "inca/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "inca/errors.hpp"

namespace inca {
namespace {

using Tokens = std::vector<std::int64_t>;

constexpr std::int64_t kSectionBreak = -7;
constexpr int kCandidateBudget = 500000;

struct Assignment {
    std::vector<int> slot_to_comp;  // slot -> original component index
    std::vector<int> comp_to_slot;  // inverse
    std::vector<int> rotation;      // per original component, 0 for paths
};

// Least cyclic rotation of a sequence of token blocks; returns every rotation
// achieving the minimum (they are the candidate symmetries of the cycle).
Tokens least_rotation(const std::vector<Tokens>& blocks) {
    const int n = static_cast<int>(blocks.size());
    auto flatten = [&](int r) {
        Tokens out;
        for (int i = 0; i < n; ++i) {
            const Tokens& b = blocks[(i + r) % n];
            out.push_back(kSectionBreak);
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    };
    Tokens best = flatten(0);
    for (int r = 1; r < n; ++r) {
        Tokens cur = flatten(r);
        if (cur < best) best = cur;
    }
    return best;
}

bool component_isolated(const GaussDiagram& m, int ci) {
    for (const auto& v : m.marks())
        if (v.component == ci) return false;
    for (const auto& it : m.interactions())
        if (it.edge.component == ci || it.agent.component == ci) return false;
    return true;
}

// Per-vertex features invariant under renaming, reordering and rotation.
// `comp_key` maps a component index to a symmetry-invariant id (a refinement
// class from the previous round, or kind/size on the first round).
std::vector<Tokens> vertex_features(const GaussDiagram& m, int ci,
                                    const std::vector<std::int64_t>& comp_key) {
    const Component& c = m.component(ci);
    std::vector<Tokens> feats(c.size);
    auto rel = [&](int from_pos, int to_pos) -> std::int64_t {
        if (c.kind == ComponentKind::Cycle) return (to_pos - from_pos + c.size) % c.size;
        return to_pos - from_pos;
    };
    for (int p = 0; p < c.size; ++p) {
        VertexRef v{ci, p};
        Tokens f;
        f.push_back(m.marked(v) ? 1 : 0);

        std::vector<Tokens> acts;
        for (const auto& it : m.interactions()) {
            if (it.agent != v) continue;
            bool same = it.edge.component == ci;
            acts.push_back({static_cast<std::int64_t>(it.sign), same ? 1 : 0,
                            same ? rel(p, it.edge.tail) : 0, comp_key[it.edge.component]});
        }
        std::sort(acts.begin(), acts.end());
        f.push_back(static_cast<std::int64_t>(acts.size()));
        for (auto& a : acts) f.insert(f.end(), a.begin(), a.end());

        auto edge_info = [&](std::optional<EdgeRef> e) {
            if (!e) {
                f.push_back(-1);
                return;
            }
            const Interaction* it = m.interaction_on(*e);
            if (!it) {
                f.push_back(0);
                return;
            }
            bool same = it->agent.component == ci;
            f.push_back(1);
            f.push_back(static_cast<std::int64_t>(it->sign));
            f.push_back(same ? 1 : 0);
            f.push_back(same ? rel(p, it->agent.position) : 0);
            f.push_back(comp_key[it->agent.component]);
        };
        edge_info(m.in_edge(v));
        edge_info(m.out_edge(v));
        feats[p] = std::move(f);
    }
    return feats;
}

Tokens component_signature(const GaussDiagram& m, int ci,
                           const std::vector<std::int64_t>& comp_key) {
    const Component& c = m.component(ci);
    Tokens sig{static_cast<std::int64_t>(c.kind), c.size};
    auto feats = vertex_features(m, ci, comp_key);
    if (c.kind == ComponentKind::Cycle) {
        Tokens rot = least_rotation(feats);
        sig.insert(sig.end(), rot.begin(), rot.end());
    } else {
        for (const auto& f : feats) {
            sig.push_back(kSectionBreak);
            sig.insert(sig.end(), f.begin(), f.end());
        }
    }
    return sig;
}

Tokens encode(const GaussDiagram& m, const Assignment& a) {
    Tokens out;
    const int k = m.component_count();
    auto new_pos = [&](VertexRef v) -> std::pair<int, int> {
        const Component& c = m.component(v.component);
        int p = v.position;
        if (c.kind == ComponentKind::Cycle) p = (p - a.rotation[v.component] + c.size) % c.size;
        return {a.comp_to_slot[v.component], p};
    };

    for (int s = 0; s < k; ++s) {
        const Component& c = m.component(a.slot_to_comp[s]);
        out.push_back(static_cast<std::int64_t>(c.kind));
        out.push_back(c.size);
    }
    out.push_back(kSectionBreak);
    for (int s = 0; s < k; ++s) {
        int ci = a.slot_to_comp[s];
        const Component& c = m.component(ci);
        for (int j = 0; j < c.edge_count(); ++j) {
            int old_tail = c.kind == ComponentKind::Cycle ? (j + a.rotation[ci]) % c.size : j;
            const Interaction* it = m.interaction_on(EdgeRef{ci, old_tail});
            if (!it) {
                out.push_back(0);
                continue;
            }
            auto [as, ap] = new_pos(it->agent);
            out.push_back(1);
            out.push_back(as);
            out.push_back(ap);
            out.push_back(static_cast<std::int64_t>(it->sign));
        }
    }
    out.push_back(kSectionBreak);
    std::vector<std::pair<int, int>> marks;
    for (const auto& v : m.marks()) marks.push_back(new_pos(v));
    std::sort(marks.begin(), marks.end());
    for (auto [s, p] : marks) {
        out.push_back(s);
        out.push_back(p);
    }
    return out;
}

std::string render(const Tokens& t) {
    std::string s = "D1";
    for (auto x : t) {
        s.push_back(',');
        s += std::to_string(x);
    }
    return s;
}

GaussDiagram rebuild(const GaussDiagram& m, const Assignment& a) {
    GaussDiagram out;
    const int k = m.component_count();
    for (int s = 0; s < k; ++s) {
        const Component& c = m.component(a.slot_to_comp[s]);
        out.add_component("c" + std::to_string(s), c.kind, c.size);
    }
    auto remap_vertex = [&](VertexRef v) -> VertexRef {
        const Component& c = m.component(v.component);
        int p = v.position;
        if (c.kind == ComponentKind::Cycle) p = (p - a.rotation[v.component] + c.size) % c.size;
        return {a.comp_to_slot[v.component], p};
    };
    auto remap_edge = [&](EdgeRef e) -> EdgeRef {
        const Component& c = m.component(e.component);
        int t = e.tail;
        if (c.kind == ComponentKind::Cycle) t = (t - a.rotation[e.component] + c.size) % c.size;
        return {a.comp_to_slot[e.component], t};
    };
    for (const auto& it : m.interactions())
        out.add_interaction({remap_edge(it.edge), remap_vertex(it.agent), it.sign});
    for (const auto& v : m.marks()) out.add_mark(remap_vertex(v));
    return out;
}

}  // namespace

CanonicalResult canonical(const GaussDiagram& m) {
    require_valid(m);
    const int k = m.component_count();

    // Two refinement rounds: the second keys cross-component references by the
    // classes discovered in the first.
    std::vector<std::int64_t> comp_key(k);
    for (int i = 0; i < k; ++i)
        comp_key[i] = static_cast<std::int64_t>(m.component(i).kind) * 1000003 + m.component(i).size;
    std::vector<Tokens> sig(k);
    for (int round = 0; round < 2; ++round) {
        for (int i = 0; i < k; ++i) sig[i] = component_signature(m, i, comp_key);
        std::map<Tokens, std::int64_t> rank;
        for (int i = 0; i < k; ++i) rank[sig[i]] = 0;
        std::int64_t r = 0;
        for (auto& [key, val] : rank) val = r++;
        for (int i = 0; i < k; ++i) comp_key[i] = rank[sig[i]];
    }

    // Classes in signature order; components with equal signatures may be
    // permuted, everything else is pinned.
    std::map<Tokens, std::vector<int>> classes;
    for (int i = 0; i < k; ++i) classes[sig[i]].push_back(i);

    std::vector<bool> isolated(k);
    for (int i = 0; i < k; ++i) isolated[i] = component_isolated(m, i);

    std::vector<std::vector<int>> class_members;
    std::vector<bool> class_fixed;  // isolated identical components: order is irrelevant
    for (auto& [key, members] : classes) {
        bool all_isolated = std::all_of(members.begin(), members.end(),
                                        [&](int i) { return isolated[i]; });
        class_members.push_back(members);
        class_fixed.push_back(all_isolated || members.size() == 1);
    }

    Assignment cur;
    cur.rotation.assign(k, 0);
    cur.comp_to_slot.assign(k, 0);

    Tokens best_tokens;
    Assignment best;
    bool have_best = false;
    int budget = kCandidateBudget;

    // Cycles whose rotation can influence the encoding.
    std::vector<int> free_cycles;
    for (int i = 0; i < k; ++i)
        if (m.component(i).kind == ComponentKind::Cycle && m.component(i).size > 1 && !isolated[i])
            free_cycles.push_back(i);

    std::function<void(std::size_t)> try_rotations = [&](std::size_t idx) {
        if (idx == free_cycles.size()) {
            if (--budget < 0) throw resource_limit("canonicalization symmetry budget exceeded");
            Tokens t = encode(m, cur);
            if (!have_best || t < best_tokens) {
                best_tokens = std::move(t);
                best = cur;
                have_best = true;
            }
            return;
        }
        int ci = free_cycles[idx];
        for (int r = 0; r < m.component(ci).size; ++r) {
            cur.rotation[ci] = r;
            try_rotations(idx + 1);
        }
        cur.rotation[ci] = 0;
    };

    std::function<void(std::size_t)> try_orders = [&](std::size_t cls) {
        if (cls == class_members.size()) {
            cur.slot_to_comp.clear();
            for (const auto& members : class_members)
                cur.slot_to_comp.insert(cur.slot_to_comp.end(), members.begin(), members.end());
            for (int s = 0; s < k; ++s) cur.comp_to_slot[cur.slot_to_comp[s]] = s;
            try_rotations(0);
            return;
        }
        if (class_fixed[cls]) {
            try_orders(cls + 1);
            return;
        }
        std::vector<int>& members = class_members[cls];
        std::sort(members.begin(), members.end());
        do {
            try_orders(cls + 1);
        } while (std::next_permutation(members.begin(), members.end()));
        std::sort(members.begin(), members.end());
    };
    try_orders(0);

    CanonicalResult result;
    result.code = render(best_tokens);
    result.diagram = rebuild(m, best);
    result.vertex_map.resize(k);
    for (int i = 0; i < k; ++i) {
        const Component& c = m.component(i);
        result.vertex_map[i].resize(c.size);
        for (int p = 0; p < c.size; ++p) {
            int np = c.kind == ComponentKind::Cycle ? (p - best.rotation[i] + c.size) % c.size : p;
            result.vertex_map[i][p] = VertexRef{best.comp_to_slot[i], np};
        }
    }
    return result;
}

std::string canonical_code(const GaussDiagram& m) { return canonical(m).code; }

UnderlyingGraph underlying_graph(const GaussDiagram& m) {
    require_valid(m);
    GaussDiagram stripped = trivial_on(m);
    auto canon = canonical(stripped);
    UnderlyingGraph out;
    out.graph = std::move(canon.diagram);
    out.code = "U" + canon.code;
    for (const auto& c : m.components()) out.shape.emplace_back(c.kind, c.size);
    std::sort(out.shape.begin(), out.shape.end());
    return out;
}

}  // namespace inca
