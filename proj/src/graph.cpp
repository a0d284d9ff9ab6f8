#include "inca/graph.hpp"

#include <algorithm>
#include <bit>

namespace inca {
namespace {

struct Bitset {
    std::vector<std::uint64_t> w;

    explicit Bitset(int blocks = 0) : w(blocks, 0) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    int first() const {
        for (std::size_t b = 0; b < w.size(); ++b)
            if (w[b]) return static_cast<int>(b * 64 + std::countr_zero(w[b]));
        return -1;
    }
};

class MisSolver {
public:
    explicit MisSolver(const SimpleGraph& g) : g_(g) {}

    int solve() {
        Bitset all(g_.blocks());
        for (int v = 0; v < g_.size(); ++v) all.set(v);
        best_ = 0;
        recurse(all, 0);
        return best_;
    }

private:
    // Greedy clique cover of the candidate set: alpha is at most the number of
    // cliques used.
    int cover_bound(const Bitset& cand) const {
        Bitset rest = cand;
        int cliques = 0;
        while (!rest.empty()) {
            ++cliques;
            int seed = rest.first();
            rest.reset(seed);
            Bitset common(g_.blocks());
            const std::uint64_t* row = g_.row(seed);
            for (int b = 0; b < g_.blocks(); ++b) common.w[b] = rest.w[b] & row[b];
            while (!common.empty()) {
                int v = common.first();
                rest.reset(v);
                common.reset(v);
                const std::uint64_t* vr = g_.row(v);
                for (int b = 0; b < g_.blocks(); ++b) common.w[b] &= vr[b];
            }
        }
        return cliques;
    }

    void recurse(Bitset cand, int current) {
        if (cand.empty()) {
            best_ = std::max(best_, current);
            return;
        }
        if (current + cover_bound(cand) <= best_) return;

        // Branch on a max-degree candidate (within the candidate set).
        int pick = -1, pick_deg = -1;
        Bitset scan = cand;
        for (int v = scan.first(); v >= 0; scan.reset(v), v = scan.first()) {
            const std::uint64_t* row = g_.row(v);
            int d = 0;
            for (int b = 0; b < g_.blocks(); ++b) d += std::popcount(row[b] & cand.w[b]);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }

        // Include pick.
        Bitset in = cand;
        in.reset(pick);
        const std::uint64_t* row = g_.row(pick);
        for (int b = 0; b < g_.blocks(); ++b) in.w[b] &= ~row[b];
        recurse(in, current + 1);

        // Exclude pick.
        cand.reset(pick);
        recurse(cand, current);
    }

    const SimpleGraph& g_;
    int best_{0};
};

}  // namespace

int SimpleGraph::edge_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
        for (int b = 0; b < blocks_; ++b) c += std::popcount(row(u)[b]);
    return c / 2;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    adj_[static_cast<std::size_t>(u) * blocks_ + (v >> 6)] |= 1ull << (v & 63);
    adj_[static_cast<std::size_t>(v) * blocks_ + (u >> 6)] |= 1ull << (u & 63);
}

SimpleGraph SimpleGraph::cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    if (n > 2) g.add_edge(n - 1, 0);
    return g;
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph strong_product(const SimpleGraph& g, const SimpleGraph& h, int max_vertices) {
    long long n = static_cast<long long>(g.size()) * h.size();
    if (n > max_vertices)
        throw resource_limit("strong product has " + std::to_string(n) + " vertices (limit " +
                             std::to_string(max_vertices) + ")");
    SimpleGraph out(static_cast<int>(n));
    for (int g1 = 0; g1 < g.size(); ++g1)
        for (int h1 = 0; h1 < h.size(); ++h1)
            for (int g2 = 0; g2 < g.size(); ++g2)
                for (int h2 = 0; h2 < h.size(); ++h2) {
                    if (g1 == g2 && h1 == h2) continue;
                    bool gok = g1 == g2 || g.adjacent(g1, g2);
                    bool hok = h1 == h2 || h.adjacent(h1, h2);
                    if (gok && hok) {
                        int a = g1 * h.size() + h1, b = g2 * h.size() + h2;
                        if (a < b) out.add_edge(a, b);
                    }
                }
    return out;
}

int independence_number(const SimpleGraph& g, int max_vertices) {
    if (g.size() > max_vertices)
        throw resource_limit("graph has " + std::to_string(g.size()) + " vertices (limit " +
                             std::to_string(max_vertices) + ")");
    if (g.size() == 0) return 0;
    return MisSolver(g).solve();
}

}  // namespace inca
