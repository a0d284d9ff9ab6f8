#include <random>

#include "doctest.h"
#include "inca/io.hpp"
#include "inca/sum.hpp"
#include "oracles.hpp"

using namespace inca;

namespace {

GaussDiagram parse(const std::string& body) { return parse_diagram("inca v1\n" + body); }

// Random diagram split into two halves with disjoint support on one graph.
std::pair<GaussDiagram, GaussDiagram> summable_pair(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GaussDiagram base = oracle::random_diagram(rng(), 14);
    GaussDiagram left = trivial_on(base), right = trivial_on(base);
    auto sup = support(base);
    for (const auto& it : base.interactions()) {
        bool to_left = std::find(sup.begin(), sup.end(), it.agent) - sup.begin() <
                       static_cast<long>(sup.size() / 2);
        (to_left ? left : right).add_interaction(it);
    }
    return {left, right};
}

}  // namespace

TEST_CASE("connect sum with the trivial diagram is the identity") {
    auto m = parse("component P path 3\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto t = trivial_on(m);
    CHECK(canonical_code(connect_sum(m, t)) == canonical_code(m));
    CHECK(canonical_code(connect_sum(t, m)) == canonical_code(m));
}

TEST_CASE("connect sum is commutative and associative at code level") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto [a, b] = summable_pair(seed);
        CHECK(canonical_code(connect_sum(a, b)) == canonical_code(connect_sum(b, a)));
    }
    auto g = parse("component P path 4\ncomponent Q cycle 3\n");
    GaussDiagram a = g, b = g, c = g;
    a.add_interaction({EdgeRef{0, 0}, VertexRef{1, 0}, Sign::Pos});
    b.add_interaction({EdgeRef{0, 1}, VertexRef{1, 1}, Sign::Neg});
    c.add_interaction({EdgeRef{1, 0}, VertexRef{0, 3}, Sign::Pos});
    CHECK(canonical_code(connect_sum(connect_sum(a, b), c)) ==
          canonical_code(connect_sum(a, connect_sum(b, c))));
}

TEST_CASE("connect sum reports each failure mode distinctly") {
    auto a = parse("component P path 3\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto different = parse("component P path 4\ncomponent Q cycle 1\n");
    CHECK_THROWS_WITH_AS(connect_sum(a, different),
                         doctest::Contains("underlying graphs differ"), std::invalid_argument);

    auto same_agent = parse("component P path 3\ncomponent Q cycle 1\ninteract P[1] by Q.0 -\n");
    CHECK_THROWS_WITH_AS(connect_sum(a, same_agent), doctest::Contains("supports overlap"),
                         std::invalid_argument);

    auto same_edge = parse("component P path 3\ncomponent Q cycle 1\ninteract P[0] by P.2 +\n");
    CHECK_THROWS_WITH_AS(connect_sum(a, same_edge), doctest::Contains("both sides"),
                         std::invalid_argument);
}

TEST_CASE("split restricts by agents and round-trips through connect sum") {
    auto m = parse(
        "component P path 4\ncomponent Q cycle 2\n"
        "interact P[0] by Q.0 +\ninteract P[2] by Q.1 -\ninteract Q[0] by P.3 +\n");
    auto sup = support(m);

    auto [all, none] = split(m, sup);
    CHECK(canonical_code(all) == canonical_code(m));
    CHECK(none.interaction_count() == 0);

    auto [empty, rest] = split(m, {});
    CHECK(empty.interaction_count() == 0);
    CHECK(canonical_code(rest) == canonical_code(m));

    auto [left, right] = split(m, {sup.front()});
    CHECK(canonical_code(connect_sum(left, right)) == canonical_code(m));

    CHECK_THROWS_AS(split(m, {VertexRef{0, 1}}), std::invalid_argument);
}

TEST_CASE("prime factorization drops units and reconstructs the input") {
    SearchBudget budget;
    budget.max_depth = 4;
    budget.max_states = 3000;

    auto trivial = parse("component C cycle 3\n");
    CHECK(prime_factorize(trivial, budget).factors.empty());

    auto single = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto f = prime_factorize(single, budget);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].triviality.no());

    // A kink agent next to a linking agent: the kink factor is a unit.
    auto mixed = parse(
        "component P path 2\ncomponent Q cycle 3\n"
        "interact P[0] by Q.0 +\ninteract Q[1] by Q.1 +\n");
    auto fm = prime_factorize(mixed, budget);
    CHECK(fm.factors.size() == 1);
    CHECK(fm.units.size() == 1);
    CHECK(fm.units[0].triviality.yes());

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GaussDiagram m = oracle::random_diagram(seed, 12);
        auto fact = prime_factorize(m, budget);
        GaussDiagram rebuilt = trivial_on(m);
        for (const auto& fac : fact.factors) rebuilt = connect_sum(rebuilt, fac.diagram);
        for (const auto& fac : fact.units) rebuilt = connect_sum(rebuilt, fac.diagram);
        CAPTURE(seed);
        CHECK(canonical_code(rebuilt) == canonical_code(m));
    }
}

TEST_CASE("factorizations match themselves and move-perturbed variants") {
    SearchBudget budget;
    budget.max_depth = 4;
    budget.max_states = 3000;

    std::mt19937_64 rng(3);
    int yes = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GaussDiagram m = oracle::random_diagram(seed, 10);
        auto f = prime_factorize(m, budget);
        CHECK(factors_match(f, f, budget).yes());

        GaussDiagram moved = m;
        auto kinds = all_move_kinds(false, false);
        for (int i = 0; i < 3; ++i) {
            auto insts = enumerate_moves(moved, kinds);
            if (insts.empty()) break;
            moved = apply(moved, insts[rng() % insts.size()]);
        }
        auto g = prime_factorize(moved, budget);
        Verdict v = factors_match(f, g, budget);
        CAPTURE(seed);
        CHECK(!v.no());
        if (v.yes()) ++yes;
    }
    CHECK(yes >= 10);  // most small perturbations are certified back
}

TEST_CASE("distinct fingerprint histograms yield a no verdict") {
    SearchBudget budget;
    auto one = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto two = parse(
        "component P path 2\ncomponent Q cycle 1\n"
        "interact P[0] by Q.0 -\n");
    auto f1 = prime_factorize(one, budget);
    auto f2 = prime_factorize(two, budget);
    Verdict v = factors_match(f1, f2, budget);
    REQUIRE(v.no());
    CHECK(v.certificate == "factor-fingerprint-histogram");

    auto other_graph = parse("component P path 3\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto f3 = prime_factorize(other_graph, budget);
    CHECK(factors_match(f1, f3, budget).certificate == "underlying-graph");
}
