#include <chrono>
#include <cmath>

#include "doctest.h"
#include "inca/capacity.hpp"
#include "inca/io.hpp"
#include "inca/moves.hpp"
#include "inca/theta.hpp"
#include "oracles.hpp"

using namespace inca;

namespace {
GaussDiagram parse(const std::string& body) { return parse_diagram("inca v1\n" + body); }
}  // namespace

TEST_CASE("automorphism groups match the permutation-filter oracle") {
    for (int n : {2, 3, 4, 5}) {
        auto got = automorphisms(trivial_quandle(n));
        auto want = oracle::automorphisms(trivial_quandle(n));
        CHECK(got == want);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(static_cast<long long>(got.size()) == fact);
    }
    auto d3 = automorphisms(dihedral_quandle(3));
    CHECK(d3 == oracle::automorphisms(dihedral_quandle(3)));
    CHECK(d3.size() == 6);  // x -> ax + b with a in {1,2}, b in Z3
}

TEST_CASE("automorphisms always form a group") {
    for (const auto& q : {dihedral_quandle(3), dihedral_quandle(4), trivial_quandle(3)}) {
        auto auts = automorphisms(q);
        std::set<std::vector<int>> set(auts.begin(), auts.end());
        std::vector<int> id(q.size);
        for (int i = 0; i < q.size; ++i) id[i] = i;
        CHECK(set.count(id) == 1);
        for (const auto& a : auts) {
            std::vector<int> inv(q.size);
            for (int i = 0; i < q.size; ++i) inv[a[i]] = i;
            CHECK(set.count(inv) == 1);
            for (const auto& b : auts) {
                std::vector<int> ab(q.size);
                for (int i = 0; i < q.size; ++i) ab[i] = a[b[i]];
                CHECK(set.count(ab) == 1);
            }
        }
    }
}

TEST_CASE("realized triples follow the coloring rule") {
    auto trivial = parse("component C cycle 3\n");
    CHECK(realized_triples(trivial, dihedral_quandle(3)).empty());

    auto single = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto triples = realized_triples(single, dihedral_quandle(3));
    CHECK(triples.size() == 9);
    for (const auto& t : triples) CHECK(t[2] == ((2 * t[1] - t[0]) % 3 + 3) % 3);

    auto kink = parse("component C cycle 2\ninteract C[0] by C.0 +\n");
    for (const auto& t : realized_triples(kink, trivial_quandle(2))) CHECK(t[0] == t[2]);
}

TEST_CASE("message graphs under transitive automorphisms: the worked example") {
    auto m = parse_diagram(
        "inca v1\ncomponent R cycle 2\ncomponent A cycle 1\ninteract R[0] by A.0 +\n");
    MessagePolicy aut_only;
    for (const auto& q : {dihedral_quandle(3), trivial_quandle(3), dihedral_quandle(5)}) {
        auto g1 = message_graph(m, q, 1, aut_only);
        CHECK(g1.edge_count() == q.size * (q.size - 1) / 2);  // complete graph
        CHECK(independence_number(g1) == 1);                  // Cap_1 = 1

        auto g2 = message_graph(m, q, 2, aut_only);
        // {xx, xy} is independent: one alpha cannot both fix x and move x.
        CHECK(!g2.adjacent(0 * q.size + 0, 0 * q.size + 1));
        CHECK(independence_number(g2) == 2);  // Cap_2 = 2
    }
}

TEST_CASE("disabling all confusion sources leaves the graph empty") {
    auto m = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    MessagePolicy none{false, false};
    auto g = message_graph(m, trivial_quandle(3), 2, none);
    CHECK(g.edge_count() == 0);
    CHECK(independence_number(g) == 9);  // Cap_k = q^k
}

TEST_CASE("message graph size limit raises a resource error") {
    auto m = parse("component C cycle 1\n");
    MessagePolicy p;
    CHECK_THROWS_AS(message_graph(m, trivial_quandle(3), 8, p, 512), resource_limit);
}

TEST_CASE("independence numbers against the subset oracle") {
    CHECK(independence_number(SimpleGraph::complete(4)) == 1);
    CHECK(independence_number(SimpleGraph::edgeless(6)) == 6);
    auto c5 = SimpleGraph::cycle(5);
    CHECK(independence_number(c5) == 2);
    CHECK(oracle::mis(c5) == 2);
    auto c5sq = strong_product(c5, c5);
    CHECK(independence_number(c5sq) == 5);
    CHECK(oracle::mis(c5sq) == 5);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6 + static_cast<int>(rng() % 8);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        CHECK(independence_number(g) == oracle::mis(g));
    }
}

TEST_CASE("strong product basics") {
    auto g = SimpleGraph::cycle(5);
    auto k1 = SimpleGraph::complete(1);
    auto gk = strong_product(g, k1);
    CHECK(gk.size() == g.size());
    CHECK(gk.edge_count() == g.edge_count());
    auto gh = strong_product(g, SimpleGraph::cycle(4));
    CHECK(gh.size() == 20);
}

TEST_CASE("cap report: worked example and supermultiplicativity") {
    auto m = parse_diagram(
        "inca v1\ncomponent R cycle 2\ncomponent A cycle 1\ninteract R[0] by A.0 +\n");
    MessagePolicy aut_only;
    auto report = cap_report(m, dihedral_quandle(3), 3, aut_only);
    REQUIRE(report.cap.size() == 3);
    CHECK(report.cap[0] == 1);
    CHECK(report.cap[1] == 2);
    CHECK(report.lower_bound >= std::sqrt(2.0) - 1e-9);
    CHECK(report.alphabet == 3);
    CHECK(report.lower_bounds_only);

    auto one = cap_report(m, trivial_quandle(1), 3, aut_only);
    for (int c : one.cap) CHECK(c == 1);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GaussDiagram d = oracle::random_diagram(seed, 8);
        for (const auto& q : {trivial_quandle(3), dihedral_quandle(3)}) {
            MessagePolicy policy{true, seed % 2 == 1};
            auto r = cap_report(d, q, 4, policy);
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l + k <= 4; ++l)
                    CHECK(r.cap[k + l - 1] >= r.cap[k - 1] * r.cap[l - 1]);
        }
    }
}

TEST_CASE("message graph edges embed into the strong power") {
    auto m = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    for (const auto& q : {dihedral_quandle(3), trivial_quandle(2)}) {
        for (bool triples : {false, true}) {
            MessagePolicy policy{true, triples};
            auto g1 = message_graph(m, q, 1, policy);
            auto g2 = message_graph(m, q, 2, policy);
            auto power = strong_product(g1, g1);
            for (int u = 0; u < g2.size(); ++u)
                for (int v = u + 1; v < g2.size(); ++v)
                    if (g2.adjacent(u, v)) CHECK(power.adjacent(u, v));
            CHECK(independence_number(g2) >= independence_number(power));
        }
    }
}

TEST_CASE("cap report is move-invariant under the aut-only policy") {
    MessagePolicy aut_only;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GaussDiagram m = oracle::enriched_diagram(seed, 10);
        auto base = cap_report(m, dihedral_quandle(3), 2, aut_only);
        for (const auto& inst : enumerate_moves(m, all_move_kinds(true, false))) {
            auto moved = cap_report(apply(m, inst), dihedral_quandle(3), 2, aut_only);
            CHECK(moved.cap == base.cap);
        }
    }
}

TEST_CASE("theta matches closed forms") {
    auto start = std::chrono::steady_clock::now();
    CHECK(lovasz_theta(SimpleGraph::cycle(5)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
    for (int n = 1; n <= 8; ++n) {
        CHECK(lovasz_theta(SimpleGraph::edgeless(n)) == doctest::Approx(n).epsilon(1e-6));
        CHECK(lovasz_theta(SimpleGraph::complete(n)) == doctest::Approx(1.0).epsilon(1e-6));
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 17);

    CHECK_THROWS_AS(lovasz_theta(SimpleGraph::edgeless(40)), resource_limit);
}

TEST_CASE("theta is sandwiched between alpha and the clique cover number") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2 == 0) g.add_edge(u, v);
        double th = lovasz_theta(g);
        CHECK(th >= independence_number(g) - 1e-6);
        CHECK(th <= n + 1e-6);
    }
}
