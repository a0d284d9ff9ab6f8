#include "inca/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "inca/canonical.hpp"
#include "inca/errors.hpp"

namespace inca {
namespace {

struct Constraint {
    int tail;   // vertex id
    int head;   // vertex id
    bool bare;  // bare edges force head == tail
    int agent;  // vertex id, meaningful when !bare
    Sign sign;
};

// One independently colorable block: components connected through interactions.
struct Cluster {
    std::vector<int> vertices;     // global vertex ids
    std::vector<Constraint> constraints;
    std::vector<int> agents;       // global vertex ids of acting agents, sorted
    bool has_interaction{false};
};

struct Problem {
    std::vector<Cluster> clusters;
    int total_vertices{0};
    int isolated_components{0};  // clusters that are a single inert strand
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

Problem build_problem(const GaussDiagram& m) {
    Problem pb;
    pb.total_vertices = m.vertex_count();

    std::vector<int> parent(m.component_count());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& it : m.interactions()) {
        int a = find_root(parent, it.edge.component);
        int b = find_root(parent, it.agent.component);
        if (a != b) parent[a] = b;
    }

    std::map<int, int> cluster_of_root;
    std::vector<std::vector<int>> comps_in_cluster;
    for (int ci = 0; ci < m.component_count(); ++ci) {
        int root = find_root(parent, ci);
        auto [pos, inserted] = cluster_of_root.try_emplace(root, comps_in_cluster.size());
        if (inserted) comps_in_cluster.emplace_back();
        comps_in_cluster[pos->second].push_back(ci);
    }

    std::vector<int> offs = vertex_id_offsets(m);
    pb.clusters.resize(comps_in_cluster.size());
    for (std::size_t k = 0; k < comps_in_cluster.size(); ++k) {
        Cluster& cl = pb.clusters[k];
        for (int ci : comps_in_cluster[k]) {
            const Component& c = m.component(ci);
            for (int p = 0; p < c.size; ++p) cl.vertices.push_back(offs[ci] + p);
            for (int j = 0; j < c.edge_count(); ++j) {
                EdgeRef e{ci, j};
                const Interaction* it = m.interaction_on(e);
                Constraint con;
                con.tail = offs[ci] + j;
                con.head = offs[ci] + c.head_of(j);
                if (it) {
                    con.bare = false;
                    con.agent = offs[it->agent.component] + it->agent.position;
                    con.sign = it->sign;
                    cl.has_interaction = true;
                } else {
                    con.bare = true;
                    con.agent = -1;
                    con.sign = Sign::Pos;
                }
                cl.constraints.push_back(con);
            }
        }
        std::vector<int> agents;
        for (const auto& it : m.interactions()) {
            int aid = offs[it.agent.component] + it.agent.position;
            if (std::find(cl.vertices.begin(), cl.vertices.end(), aid) != cl.vertices.end())
                agents.push_back(aid);
        }
        std::sort(agents.begin(), agents.end());
        agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
        cl.agents = std::move(agents);
        if (!cl.has_interaction) ++pb.isolated_components;
    }
    return pb;
}

// Backtracking counter over one cluster for a fixed op assignment.
class ClusterSolver {
public:
    ClusterSolver(const Cluster& cl, const MultiQuandle& q, const std::vector<int>& op_of_agent,
                  std::vector<int>& colors, long long& steps, long long max_steps)
        : cl_(cl), q_(q), op_of_agent_(op_of_agent), colors_(colors), steps_(steps),
          max_steps_(max_steps) {}

    // fn: called per solution; return false to abort. Returns false if aborted.
    bool solve(const std::function<bool()>& fn) { return recurse(fn); }

private:
    int op_for(int agent) const { return op_of_agent_.at(agent); }

    // Deduce colors until fixpoint. Records assignments on the trail; returns
    // false on contradiction.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& con : cl_.constraints) {
                int t = colors_[con.tail], h = colors_[con.head];
                if (con.bare) {
                    if (t >= 0 && h < 0) { set(con.head, t, trail); changed = true; }
                    else if (h >= 0 && t < 0) { set(con.tail, h, trail); changed = true; }
                    else if (t >= 0 && h >= 0 && t != h) return false;
                    continue;
                }
                int a = colors_[con.agent];
                if (a < 0) continue;
                int op = op_for(con.agent);
                if (t >= 0) {
                    int want = q_.signed_apply(op, con.sign, t, a);
                    if (h < 0) { set(con.head, want, trail); changed = true; }
                    else if (h != want) return false;
                } else if (h >= 0) {
                    int want = q_.signed_apply(op, negate(con.sign), h, a);
                    set(con.tail, want, trail);
                    changed = true;
                }
            }
        }
        return true;
    }

    void set(int v, int c, std::vector<int>& trail) {
        colors_[v] = c;
        trail.push_back(v);
    }

    int pick_branch() const {
        for (int a : cl_.agents)
            if (colors_[a] < 0) return a;
        for (int v : cl_.vertices)
            if (colors_[v] < 0) return v;
        return -1;
    }

    bool recurse(const std::function<bool()>& fn) {
        if (++steps_ > max_steps_) throw resource_limit("coloring enumeration budget exceeded");
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) colors_[v] = -1;
            return true;
        }
        int branch = pick_branch();
        bool keep_going = true;
        if (branch < 0) {
            keep_going = fn();
        } else {
            for (int c = 0; c < q_.size && keep_going; ++c) {
                colors_[branch] = c;
                keep_going = recurse(fn);
                colors_[branch] = -1;
            }
        }
        for (int v : trail) colors_[v] = -1;
        return keep_going;
    }

    const Cluster& cl_;
    const MultiQuandle& q_;
    const std::vector<int>& op_of_agent_;
    std::vector<int>& colors_;
    long long& steps_;
    long long max_steps_;
};

// Iterate op assignments for one cluster (one op per acting agent).
template <typename Fn>
bool for_each_op_assignment(const Cluster& cl, const MultiQuandle& q,
                            std::vector<int>& op_of_agent, Fn&& fn) {
    const int nb = q.op_count();
    std::vector<int> choice(cl.agents.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < cl.agents.size(); ++i) op_of_agent[cl.agents[i]] = choice[i];
        if (!fn()) return false;
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < nb) break;
            choice[i] = 0;
        }
        if (i == choice.size()) return true;
        if (choice.empty()) return true;
    }
}

}  // namespace

std::vector<int> vertex_id_offsets(const GaussDiagram& m) {
    std::vector<int> offs(m.component_count() + 1, 0);
    for (int ci = 0; ci < m.component_count(); ++ci)
        offs[ci + 1] = offs[ci] + m.component(ci).size;
    return offs;
}

int vertex_id(const GaussDiagram& m, VertexRef v) {
    return vertex_id_offsets(m)[v.component] + v.position;
}

long long count_colorings(const GaussDiagram& m, const MultiQuandle& q) {
    require_valid(m);
    Problem pb = build_problem(m);
    std::vector<int> colors(pb.total_vertices, -1);
    std::vector<int> op_of_agent(pb.total_vertices, 0);
    long long steps = 0;

    long long total = 1;
    for (const auto& cl : pb.clusters) {
        if (!cl.has_interaction) {
            // A lone strand of bare edges: one free color.
            total *= q.size;
            continue;
        }
        long long cluster_count = 0;
        for_each_op_assignment(cl, q, op_of_agent, [&] {
            ClusterSolver solver(cl, q, op_of_agent, colors, steps, 500'000'000);
            solver.solve([&] {
                ++cluster_count;
                return true;
            });
            return true;
        });
        total *= cluster_count;
        if (total == 0) return 0;
    }
    return total;
}

void for_each_coloring(const GaussDiagram& m, const MultiQuandle& q,
                       const std::function<bool(const ColoringView&)>& fn, long long max_steps) {
    require_valid(m);
    Problem pb = build_problem(m);
    std::vector<int> colors(pb.total_vertices, -1);
    std::vector<int> op_of_agent(pb.total_vertices, 0);
    std::vector<int> agent_ops;  // per support vertex, in support order
    long long steps = 0;

    std::vector<const Cluster*> order;
    for (const auto& cl : pb.clusters) order.push_back(&cl);

    auto support_agents = [&] {
        std::vector<int> all;
        for (const auto& cl : pb.clusters) all.insert(all.end(), cl.agents.begin(), cl.agents.end());
        std::sort(all.begin(), all.end());
        return all;
    }();

    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        if (idx == order.size()) {
            agent_ops.clear();
            for (int a : support_agents) agent_ops.push_back(op_of_agent[a]);
            return fn(ColoringView{colors, agent_ops});
        }
        const Cluster& cl = *order[idx];
        return for_each_op_assignment(cl, q, op_of_agent, [&] {
            ClusterSolver solver(cl, q, op_of_agent, colors, steps, max_steps);
            return solver.solve([&] { return rec(idx + 1); });
        });
    };
    rec(0);
}

QuandlePresentation quandle_presentation(const GaussDiagram& m) {
    require_valid(m);
    GaussDiagram c = canonical(m).diagram;
    QuandlePresentation out;
    std::vector<int> offs = vertex_id_offsets(c);
    for (int ci = 0; ci < c.component_count(); ++ci)
        for (int p = 0; p < c.component(ci).size; ++p)
            out.generators.push_back("g" + std::to_string(offs[ci] + p));

    auto agents = support(c);
    std::map<VertexRef, int> op_index;
    for (const auto& a : agents) {
        op_index[a] = static_cast<int>(out.op_symbols.size());
        out.op_symbols.push_back("t" + std::to_string(out.op_symbols.size()));
    }

    for (int ci = 0; ci < c.component_count(); ++ci) {
        const Component& comp = c.component(ci);
        for (int j = 0; j < comp.edge_count(); ++j) {
            EdgeRef e{ci, j};
            QuandlePresentation::Relation rel;
            rel.tail = offs[ci] + j;
            rel.head = offs[ci] + comp.head_of(j);
            const Interaction* it = c.interaction_on(e);
            if (it) {
                rel.bare = false;
                rel.op = op_index[it->agent];
                rel.agent = offs[it->agent.component] + it->agent.position;
                rel.sign = it->sign;
            } else {
                rel.bare = true;
                rel.op = -1;
                rel.agent = -1;
                rel.sign = Sign::Pos;
            }
            out.relations.push_back(rel);
        }
    }
    return out;
}

std::string QuandlePresentation::text() const {
    std::ostringstream out;
    out << "generators:";
    for (const auto& g : generators) out << ' ' << g;
    out << "\nops:";
    for (const auto& t : op_symbols) out << ' ' << t;
    out << "\n";
    for (const auto& r : relations) {
        if (r.bare)
            out << generators[r.head] << " = " << generators[r.tail] << '\n';
        else
            out << generators[r.head] << " = " << generators[r.tail]
                << (r.sign == Sign::Pos ? " >" : " <") << op_symbols[r.op] << ' '
                << generators[r.agent] << '\n';
    }
    return out.str();
}

}  // namespace inca
