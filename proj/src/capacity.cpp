#include "inca/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "inca/coloring.hpp"
#include "inca/errors.hpp"

namespace inca {

std::vector<std::vector<int>> automorphisms(const MultiQuandle& q) {
    require_valid(q);
    const int n = q.size;
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    // alpha(x > y) = alpha(x) > alpha(y) checked as soon as all three images exist.
    auto consistent = [&](int just_set) {
        for (const auto& op : q.ops)
            for (int x = 0; x < n; ++x) {
                if (perm[x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (perm[y] < 0) continue;
                    if (x != just_set && y != just_set && op.table[x][y] != just_set) continue;
                    int img = perm[op.table[x][y]];
                    if (img >= 0 && img != op.table[perm[x]][perm[y]]) return false;
                }
            }
        return true;
    };

    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            perm[x] = v;
            used[v] = true;
            if (consistent(x)) rec(x + 1);
            perm[x] = -1;
            used[v] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::array<int, 3>> realized_triples(const GaussDiagram& m, const MultiQuandle& q) {
    require_valid(m);
    require_valid(q);
    std::set<std::array<int, 3>> out;
    if (m.interactions().empty()) return out;

    std::vector<int> offs = vertex_id_offsets(m);
    std::vector<std::array<int, 3>> sites;  // (tail id, agent id, head id)
    for (const auto& it : m.interactions()) {
        int t = offs[it.edge.component] + it.edge.tail;
        int h = offs[it.edge.component] + m.component(it.edge.component).head_of(it.edge.tail);
        int a = offs[it.agent.component] + it.agent.position;
        sites.push_back({t, a, h});
    }
    for_each_coloring(m, q, [&](const ColoringView& view) {
        for (const auto& s : sites)
            out.insert({view.colors[s[0]], view.colors[s[1]], view.colors[s[2]]});
        return true;
    });
    return out;
}

SimpleGraph message_graph(const GaussDiagram& m, const MultiQuandle& q, int k,
                          const MessagePolicy& policy, int max_vertices) {
    require_valid(q);
    if (k < 1) throw std::invalid_argument("message length must be positive");
    long long n = 1;
    for (int i = 0; i < k; ++i) {
        n *= q.size;
        if (n > max_vertices)
            throw resource_limit("message graph on " + std::to_string(q.size) + "^" +
                                 std::to_string(k) + " vertices exceeds the limit of " +
                                 std::to_string(max_vertices));
    }

    std::vector<std::vector<int>> auts;
    if (policy.use_automorphisms) auts = automorphisms(q);
    else auts.push_back([&] {
        std::vector<int> id(q.size);
        for (int i = 0; i < q.size; ++i) id[i] = i;
        return id;
    }());

    // Pairwise confusability from realized triples: {a,b} (a != b) inside some
    // triple's element set.
    std::vector<std::vector<bool>> pair_ok(q.size, std::vector<bool>(q.size, false));
    if (policy.use_triples) {
        for (const auto& t : realized_triples(m, q)) {
            std::array<int, 3> e{t[0], t[1], t[2]};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (e[i] != e[j]) pair_ok[e[i]][e[j]] = true;
        }
    }

    const int total = static_cast<int>(n);
    auto digits = [&](int msg) {
        std::vector<int> d(k);
        for (int i = k - 1; i >= 0; --i) {
            d[i] = msg % q.size;
            msg /= q.size;
        }
        return d;
    };

    SimpleGraph g(total);
    std::vector<int> image(k);
    for (const auto& alpha : auts) {
        for (int msg = 0; msg < total; ++msg) {
            std::vector<int> d = digits(msg);
            for (auto& x : image) x = 0;
            // Enumerate all m' compatible with this alpha coordinate-wise.
            std::function<void(int, int)> emit = [&](int pos, int acc) {
                if (pos == k) {
                    if (acc != msg) g.add_edge(msg, acc);
                    return;
                }
                int a = alpha[d[pos]];
                emit(pos + 1, acc * q.size + a);
                if (policy.use_triples)
                    for (int b = 0; b < q.size; ++b)
                        if (pair_ok[a][b]) emit(pos + 1, acc * q.size + b);
            };
            emit(0, 0);
        }
    }
    return g;
}

CapReport cap_report(const GaussDiagram& m, const MultiQuandle& q, int kmax,
                     const MessagePolicy& policy, int max_vertices) {
    CapReport report;
    report.alphabet = q.size;
    for (int k = 1; k <= kmax; ++k) {
        SimpleGraph g = message_graph(m, q, k, policy, max_vertices);
        int cap = independence_number(g, max_vertices);
        report.cap.push_back(cap);
        report.lower_bound = std::max(report.lower_bound, std::pow(cap, 1.0 / k));
    }
    return report;
}

}  // namespace inca
