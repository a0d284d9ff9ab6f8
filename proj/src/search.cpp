#include "inca/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <unordered_map>

#include "inca/coloring.hpp"
#include "inca/fingerprint.hpp"
#include "inca/linking.hpp"

namespace inca {
namespace {

MoveInstance remap_instance(const MoveInstance& inst,
                            const std::vector<std::vector<VertexRef>>& vmap) {
    auto map_v = [&](VertexRef v) { return vmap[v.component][v.position]; };
    auto map_e = [&](EdgeRef e) {
        VertexRef t = map_v({e.component, e.tail});
        return EdgeRef{t.component, t.position};
    };
    MoveInstance out = inst;
    out.edge = map_e(inst.edge);
    out.vertex = map_v(inst.vertex);
    out.agent = map_v(inst.agent);
    for (auto& e : out.moved) e = map_e(e);
    std::sort(out.moved.begin(), out.moved.end());
    return out;
}

struct Node {
    GaussDiagram diag;  // canonical
    int parent{-1};
    MoveInstance via;   // applied to the parent's canonical diagram
    int depth{0};
};

struct Candidate {
    int parent;
    MoveInstance inst;
    CanonicalResult canon;
};

// Expands a frontier; chunked across workers, results concatenated in parent
// order so the output is independent of scheduling.
std::vector<Candidate> expand_frontier(const std::vector<Node>& nodes,
                                       const std::vector<int>& frontier,
                                       const std::set<MoveKind>& kinds, int workers) {
    auto expand_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<Candidate> out;
        for (std::size_t i = lo; i < hi; ++i) {
            const Node& node = nodes[frontier[i]];
            for (const auto& inst : enumerate_moves(node.diag, kinds)) {
                Candidate c{frontier[i], inst, canonical(apply(node.diag, inst))};
                out.push_back(std::move(c));
            }
        }
        return out;
    };

    if (workers <= 1 || frontier.size() < 2) return expand_range(0, frontier.size());

    std::size_t chunk = (frontier.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<Candidate>>> futs;
    for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
        std::size_t hi = std::min(frontier.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, expand_range, lo, hi));
    }
    std::vector<Candidate> out;
    for (auto& f : futs) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

std::vector<MoveInstance> chain_from_root(const std::vector<Node>& nodes, int idx) {
    std::vector<MoveInstance> path;
    for (int cur = idx; nodes[cur].parent >= 0; cur = nodes[cur].parent)
        path.push_back(nodes[cur].via);
    std::reverse(path.begin(), path.end());
    return path;
}

// Path from `idx` back to the root of its (backward) tree, each step inverted
// and expressed in the child's canonical coordinates.
std::vector<MoveInstance> chain_to_root_inverted(const std::vector<Node>& nodes, int idx) {
    std::vector<MoveInstance> path;
    for (int cur = idx; nodes[cur].parent >= 0; cur = nodes[cur].parent) {
        const Node& parent = nodes[nodes[cur].parent];
        MoveInstance inv = inverse_of(parent.diag, nodes[cur].via);
        CanonicalResult c = canonical(apply(parent.diag, nodes[cur].via));
        path.push_back(remap_instance(inv, c.vertex_map));
    }
    return path;
}

long long power(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Certificates usable for is_trivial under the budget's move set.
std::string triviality_certificate(const GaussDiagram& m, const SearchBudget& budget) {
    for (const auto& q : default_panel()) {
        long long have = count_colorings(m, q);
        long long want = power(q.size, m.component_count());
        if (have != want) return "colorings[" + q.name + "]";
    }
    if (!budget.use_false) {
        auto lk = linking_graph(m, LinkingVariant::ReducedUnframed);
        for (const auto& comp : lk.vectors)
            for (const auto& vec : comp)
                for (long long x : vec)
                    if (x != 0) return "linking:reduced-unframed";
    }
    return {};
}

}  // namespace

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Yes: return "yes";
        case Verdict::Kind::No: return "no";
        case Verdict::Kind::Unknown: return "unknown";
    }
    return "?";
}

GaussDiagram replay(const GaussDiagram& start, const std::vector<MoveInstance>& witness) {
    GaussDiagram cur = canonical(start).diagram;
    for (const auto& inst : witness) cur = canonical(apply(cur, inst)).diagram;
    return cur;
}

std::pair<GaussDiagram, std::vector<MoveInstance>> simplify_with_path(const GaussDiagram& m,
                                                                      const SearchBudget& budget) {
    std::set<MoveKind> reducing{MoveKind::R1Remove, MoveKind::R2Cancel};
    if (budget.stable) reducing.insert(MoveKind::Destab);
    if (budget.use_false) reducing.insert(MoveKind::FalseDestab);
    std::set<MoveKind> lateral{MoveKind::R3Slide, MoveKind::R3Unslide};

    auto score = [](const GaussDiagram& d) {
        return std::pair<int, int>(d.interaction_count(), d.vertex_count());
    };

    GaussDiagram cur = canonical(m).diagram;
    std::vector<MoveInstance> path;

    while (static_cast<int>(path.size()) < budget.max_depth) {
        auto cur_score = score(cur);

        // Best single reducing step.
        bool stepped = false;
        std::pair<int, int> best_score = cur_score;
        std::string best_code;
        GaussDiagram best_diag;
        MoveInstance best_inst;
        for (const auto& inst : enumerate_moves(cur, reducing, false)) {
            CanonicalResult c = canonical(apply(cur, inst));
            auto s = score(c.diagram);
            if (s < cur_score && (!stepped || s < best_score ||
                                  (s == best_score && c.code < best_code))) {
                stepped = true;
                best_score = s;
                best_code = c.code;
                best_diag = c.diagram;
                best_inst = inst;
            }
        }
        if (stepped) {
            path.push_back(best_inst);
            cur = std::move(best_diag);
            continue;
        }

        // Plateau: breadth-first over R3 slides looking for any state that
        // admits a reducing step.
        int remaining = budget.max_depth - static_cast<int>(path.size());
        if (remaining < 2) break;
        std::vector<Node> nodes{Node{cur, -1, {}, 0}};
        std::map<std::string, int> seen{{canonical_code(cur), 0}};
        std::vector<int> frontier{0};
        bool jumped = false;
        for (int depth = 1; depth < remaining && !jumped && !frontier.empty(); ++depth) {
            std::vector<int> next;
            for (int idx : frontier) {
                for (const auto& inst : enumerate_moves(nodes[idx].diag, lateral, false)) {
                    CanonicalResult c = canonical(apply(nodes[idx].diag, inst));
                    if (seen.count(c.code)) continue;
                    if (static_cast<int>(nodes.size()) >= budget.max_states) break;
                    seen.emplace(c.code, static_cast<int>(nodes.size()));
                    nodes.push_back({c.diagram, idx, inst, depth});
                    int ni = static_cast<int>(nodes.size()) - 1;

                    // Reducing step available from here?
                    for (const auto& red : enumerate_moves(c.diagram, reducing, false)) {
                        CanonicalResult rc = canonical(apply(c.diagram, red));
                        if (score(rc.diagram) < cur_score) {
                            auto plateau = chain_from_root(nodes, ni);
                            if (static_cast<int>(path.size() + plateau.size()) + 1 >
                                budget.max_depth)
                                break;
                            path.insert(path.end(), plateau.begin(), plateau.end());
                            path.push_back(red);
                            cur = rc.diagram;
                            jumped = true;
                            break;
                        }
                    }
                    if (jumped) break;
                    next.push_back(ni);
                }
                if (jumped) break;
            }
            frontier = std::move(next);
        }
        if (!jumped) break;
    }
    return {cur, path};
}

GaussDiagram simplify(const GaussDiagram& m, const SearchBudget& budget) {
    return simplify_with_path(m, budget).first;
}

Verdict equivalent(const GaussDiagram& a, const GaussDiagram& b, const SearchBudget& budget,
                   int workers) {
    require_valid(a);
    require_valid(b);
    CanonicalResult ca = canonical(a), cb = canonical(b);
    if (ca.code == cb.code) return {Verdict::Kind::Yes, {}, {}};

    std::string cert = fingerprint_mismatch(fingerprint(a), fingerprint(b), budget.stable,
                                            budget.use_false);
    if (!cert.empty()) return {Verdict::Kind::No, {}, cert};

    auto kinds = all_move_kinds(budget.stable, budget.use_false);

    // side 0: forward from a; side 1: backward from b.
    std::vector<Node> nodes[2] = {{Node{ca.diagram, -1, {}, 0}}, {Node{cb.diagram, -1, {}, 0}}};
    std::unordered_map<std::string, int> visited[2] = {{{ca.code, 0}}, {{cb.code, 0}}};
    std::vector<int> frontier[2] = {{0}, {0}};
    int depth[2] = {0, 0};

    auto witness = [&](int fwd_idx, int bwd_idx) {
        std::vector<MoveInstance> w = chain_from_root(nodes[0], fwd_idx);
        auto back = chain_to_root_inverted(nodes[1], bwd_idx);
        w.insert(w.end(), back.begin(), back.end());
        return w;
    };

    while (depth[0] + depth[1] < budget.max_depth && !frontier[0].empty() &&
           !frontier[1].empty()) {
        int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        int other = 1 - side;
        if (static_cast<int>(nodes[0].size() + nodes[1].size()) >= budget.max_states)
            return {Verdict::Kind::Unknown, {}, {}};

        auto candidates = expand_frontier(nodes[side], frontier[side], kinds, workers);
        std::vector<int> next;
        for (auto& c : candidates) {
            if (visited[side].count(c.canon.code)) continue;
            if (static_cast<int>(nodes[0].size() + nodes[1].size()) >= budget.max_states)
                return {Verdict::Kind::Unknown, {}, {}};
            nodes[side].push_back({c.canon.diagram, c.parent, c.inst, depth[side] + 1});
            int idx = static_cast<int>(nodes[side].size()) - 1;
            visited[side].emplace(c.canon.code, idx);
            next.push_back(idx);

            auto hit = visited[other].find(c.canon.code);
            if (hit != visited[other].end()) {
                int fwd = side == 0 ? idx : hit->second;
                int bwd = side == 0 ? hit->second : idx;
                return {Verdict::Kind::Yes, witness(fwd, bwd), {}};
            }
        }
        frontier[side] = std::move(next);
        ++depth[side];
    }
    return {Verdict::Kind::Unknown, {}, {}};
}

Verdict is_trivial(const GaussDiagram& m, const SearchBudget& budget, int workers) {
    require_valid(m);
    CanonicalResult cm = canonical(m);
    if (cm.diagram.interaction_count() == 0) return {Verdict::Kind::Yes, {}, {}};

    std::string cert = triviality_certificate(m, budget);
    if (!cert.empty()) return {Verdict::Kind::No, {}, cert};

    // Cheap witness first.
    auto [simplified, path] = simplify_with_path(m, budget);
    if (simplified.interaction_count() == 0) return {Verdict::Kind::Yes, std::move(path), {}};

    auto kinds = all_move_kinds(budget.stable, budget.use_false);
    std::vector<Node> nodes{Node{cm.diagram, -1, {}, 0}};
    std::unordered_map<std::string, int> visited{{cm.code, 0}};
    std::vector<int> frontier{0};
    for (int depth = 1; depth <= budget.max_depth && !frontier.empty(); ++depth) {
        auto candidates = expand_frontier(nodes, frontier, kinds, workers);
        std::vector<int> next;
        for (auto& c : candidates) {
            if (visited.count(c.canon.code)) continue;
            if (static_cast<int>(nodes.size()) >= budget.max_states)
                return {Verdict::Kind::Unknown, {}, {}};
            nodes.push_back({c.canon.diagram, c.parent, c.inst, depth});
            int idx = static_cast<int>(nodes.size()) - 1;
            visited.emplace(c.canon.code, idx);
            if (c.canon.diagram.interaction_count() == 0)
                return {Verdict::Kind::Yes, chain_from_root(nodes, idx), {}};
            next.push_back(idx);
        }
        frontier = std::move(next);
    }
    return {Verdict::Kind::Unknown, {}, {}};
}

TrivialAgentsReport trivial_agents(const GaussDiagram& m, const SearchBudget& budget) {
    require_valid(m);
    TrivialAgentsReport report;
    report.exhaustive = true;

    auto kinds = all_move_kinds(budget.stable, budget.use_false);
    CanonicalResult cm = canonical(m);

    for (const auto& agent : agent_set(m)) {
        if (!m.acts(agent)) {
            report.certified.push_back(agent);  // not acting anywhere: trivial at depth 0
            continue;
        }

        // BFS over (canonical state, tracked image of the agent).
        struct TrackedNode {
            GaussDiagram diag;
            VertexRef tracked;
        };
        VertexRef start = cm.vertex_map[agent.component][agent.position];
        std::vector<TrackedNode> nodes{{cm.diagram, start}};
        std::set<std::pair<std::string, VertexRef>> visited{{cm.code, start}};
        std::vector<int> frontier{0};
        bool found = false, truncated = false;
        for (int depth = 1; depth <= budget.max_depth && !frontier.empty() && !found; ++depth) {
            std::vector<int> next;
            for (int idx : frontier) {
                const auto node = nodes[idx];
                for (const auto& inst : enumerate_moves(node.diag, kinds)) {
                    VertexRef moved = map_vertex(node.diag, inst, node.tracked);
                    CanonicalResult c = canonical(apply(node.diag, inst));
                    VertexRef tracked = c.vertex_map[moved.component][moved.position];
                    if (!visited.insert({c.code, tracked}).second) continue;
                    if (!c.diagram.acts(tracked)) {
                        found = true;
                        break;
                    }
                    if (static_cast<int>(nodes.size()) >= budget.max_states) {
                        truncated = true;
                        break;
                    }
                    nodes.push_back({c.diagram, tracked});
                    next.push_back(static_cast<int>(nodes.size()) - 1);
                }
                if (found || truncated) break;
            }
            if (truncated) break;
            frontier = std::move(next);
        }
        if (found)
            report.certified.push_back(agent);
        else if (truncated || !frontier.empty())
            report.exhaustive = false;  // stopped by depth or state budget, not closure
    }

    auto lk = linking_graph(m, LinkingVariant::ReducedUnframed);
    for (const auto& comp : lk.vectors)
        for (const auto& vec : comp)
            if (std::any_of(vec.begin(), vec.end(), [](long long x) { return x != 0; }))
                ++report.nontrivial_lower_bound;
    return report;
}

ReducedGraphReport reduced_graph(const GaussDiagram& m, const SearchBudget& budget) {
    auto report = trivial_agents(m, budget);
    std::set<VertexRef> contracted(report.certified.begin(), report.certified.end());
    std::set<VertexRef> agents;
    for (const auto& a : agent_set(m))
        if (!contracted.count(a)) agents.insert(a);

    GaussDiagram reduced;
    for (int ci = 0; ci < m.component_count(); ++ci) {
        const Component& c = m.component(ci);
        std::vector<int> kept;
        for (int p = 0; p < c.size; ++p)
            if (!contracted.count(VertexRef{ci, p})) kept.push_back(p);
        int size = std::max<int>(1, static_cast<int>(kept.size()));
        int nci = reduced.add_component(c.name, c.kind, size);
        for (std::size_t np = 0; np < kept.size(); ++np)
            if (agents.count(VertexRef{ci, kept[np]}))
                reduced.add_mark(VertexRef{nci, static_cast<int>(np)});
    }

    ReducedGraphReport out;
    out.graph = underlying_graph(reduced);
    out.exhaustive = report.exhaustive;
    return out;
}

}  // namespace inca
