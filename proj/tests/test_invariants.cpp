#include <set>

#include "doctest.h"
#include "inca/coloring.hpp"
#include "inca/fingerprint.hpp"
#include "inca/io.hpp"
#include "inca/linking.hpp"
#include "inca/moves.hpp"
#include "inca/quandle.hpp"
#include "inca/wcode.hpp"
#include "oracles.hpp"

using namespace inca;

namespace {
GaussDiagram parse(const std::string& body) { return parse_diagram("inca v1\n" + body); }
}  // namespace

TEST_CASE("dihedral and trivial quandles satisfy the axioms") {
    for (int n : {2, 3, 4, 5, 7, 9}) {
        CHECK(validate_quandle(dihedral_quandle(n)).empty());
        CHECK(validate_quandle(trivial_quandle(n)).empty());
    }
}

TEST_CASE("corrupting one table entry always violates an axiom") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        MultiQuandle q = dihedral_quandle(4);
        int x = rng() % 4, y = rng() % 4;
        int bad = (q.ops[0].table[x][y] + 1 + rng() % 3) % 4;
        q.ops[0].table[x][y] = bad;
        CHECK(!validate_quandle(q).empty());
    }
}

TEST_CASE("quandle table documents round-trip") {
    MultiQuandle q = dihedral_quandle(5);
    MultiQuandle back = parse_quandle(serialize_quandle(q));
    CHECK(back.size == 5);
    CHECK(back.ops[0].table == q.ops[0].table);
    CHECK(validate_quandle(back).empty());
    CHECK(quandle_from_spec("dihedral:5").ops[0].table == q.ops[0].table);
}

TEST_CASE("coloring counts match hand-computed small examples") {
    // One positive interaction by the cycle vertex on the path edge.
    auto single = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    CHECK(count_colorings(single, dihedral_quandle(3)) == 9);
    CHECK(oracle::colorings(single, dihedral_quandle(3)) == 9);

    // Kink: agent is its own tail.
    auto kink = parse("component C cycle 2\ninteract C[0] by C.0 +\n");
    CHECK(count_colorings(kink, dihedral_quandle(3)) == 3);
    CHECK(oracle::colorings(kink, dihedral_quandle(3)) == 3);

    // Trivial diagram: one free color per component.
    auto trivial = parse("component A cycle 3\ncomponent B path 2\n");
    for (int n : {2, 3, 5}) {
        CHECK(count_colorings(trivial, trivial_quandle(n)) == n * n);
        CHECK(count_colorings(trivial, dihedral_quandle(n)) == n * n);
    }
}

TEST_CASE("coloring counts agree with the brute-force oracle on random diagrams") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GaussDiagram m = oracle::random_diagram(seed, 9);
        for (const auto& q : {dihedral_quandle(3), trivial_quandle(2), dihedral_quandle(4)}) {
            CAPTURE(seed);
            CHECK(count_colorings(m, q) == oracle::colorings(m, q));
        }
    }
}

TEST_CASE("trivial quandle closed form holds for arbitrary diagrams") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        GaussDiagram m = oracle::random_diagram(seed);
        long long want = 1;
        for (int i = 0; i < m.component_count(); ++i) want *= 3;
        CHECK(count_colorings(m, trivial_quandle(3)) == want);
    }
}

TEST_CASE("presentations count one relation per interaction plus bare edge") {
    auto m = parse("component P path 3\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto pres = quandle_presentation(m);
    CHECK(pres.generators.size() == 4);
    CHECK(pres.op_symbols.size() == 1);
    // One interaction plus two bare edges (P[1] and Q's loop).
    CHECK(pres.relations.size() == 3);
    int bare = 0;
    for (const auto& r : pres.relations) bare += r.bare ? 1 : 0;
    CHECK(bare == 2);

    auto trivial = parse("component C cycle 2\n");
    auto tp = quandle_presentation(trivial);
    CHECK(tp.generators.size() == 2);
    CHECK(tp.op_symbols.empty());
    CHECK(tp.relations.size() == 2);
    CHECK(tp.text().find("g1 = g0") != std::string::npos);
}

TEST_CASE("linking vectors count signed actions per component") {
    auto single = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto lk = linking_graph(single, LinkingVariant::Full);
    // Q.0's vector has a 1 in P's slot.
    CHECK(lk.vectors[1][0] == std::vector<long long>{1, 0});
    CHECK(lk.vectors[0][0] == std::vector<long long>{0, 0});

    // An R2 pair by the same agent cancels.
    auto pair = parse(
        "component P path 3\ncomponent Q cycle 1\n"
        "interact P[0] by Q.0 +\ninteract P[1] by Q.0 -\n");
    auto lk2 = linking_graph(pair, LinkingVariant::Full);
    CHECK(lk2.vectors[1][0] == std::vector<long long>{0, 0});

    // Inserting an opposite pair leaves every full vector unchanged.
    auto longer = parse(
        "component P path 4\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto inserted = r2_insert(longer, VertexRef{0, 2}, VertexRef{1, 0}, Sign::Pos);
    CHECK(linking_graph(inserted, LinkingVariant::Full).vectors ==
          linking_graph(longer, LinkingVariant::Full).vectors);
}

TEST_CASE("kinks touch only the diagonal, which unframing clears") {
    auto kink = parse("component C cycle 2\ninteract C[0] by C.0 +\n");
    auto full = linking_graph(kink, LinkingVariant::Full);
    CHECK(full.vectors[0][0] == std::vector<long long>{1});
    auto unframed = linking_graph(kink, LinkingVariant::Unframed);
    CHECK(unframed.vectors[0][0] == std::vector<long long>{0});
    auto bare = parse("component C cycle 2\n");
    CHECK(unframed.code == linking_graph(bare, LinkingVariant::Unframed).code);
    CHECK(full.code != linking_graph(bare, LinkingVariant::Full).code);
}

TEST_CASE("reduced linking graphs contract zero-vector vertices") {
    auto m = parse(
        "component P path 4\ncomponent Q cycle 1\n"
        "interact P[1] by Q.0 +\n");
    auto red = linking_graph(m, LinkingVariant::ReducedUnframed);
    CHECK(red.components[1].size == 1);  // Q kept as a marker
    CHECK(red.components[0].size == 1);  // P collapses around the zero vertices

    auto shifted = parse(
        "component P path 4\ncomponent Q cycle 1\n"
        "interact P[2] by Q.0 +\n");
    CHECK(red.code == linking_graph(shifted, LinkingVariant::ReducedUnframed).code);
    // The linking data itself is identical: only the acted-on edge moved.
    CHECK(linking_graph(m, LinkingVariant::Full).code ==
          linking_graph(shifted, LinkingVariant::Full).code);
}

TEST_CASE("w-code is blind to stabilization and bare-edge merges") {
    auto m = parse(
        "component P path 3\ncomponent Q cycle 1\n"
        "interact P[0] by Q.0 +\ninteract P[1] by Q.0 -\n");
    auto base = w_code(m);

    auto stabbed = stabilize(m, VertexRef{0, 1}, true);
    CHECK(w_code(stabbed) == base);

    // Two acting agents joined by a bare edge vs. the pre-merged single agent.
    auto joined = parse(
        "component P path 4\ncomponent B path 2\n"
        "interact P[0] by B.0 +\ninteract P[2] by B.1 -\n");
    auto merged = parse(
        "component P path 4\ncomponent B path 1\n"
        "interact P[0] by B.0 +\ninteract P[2] by B.0 -\n");
    CHECK(w_code(joined) == w_code(merged));

    auto trivial = parse("component Q cycle 1\ncomponent P path 2\n");
    auto wt = w_code(trivial);
    for (const auto& seq : wt.per_component) CHECK(seq.empty());
}

TEST_CASE("fingerprints differ between trivial and linked diagrams") {
    auto trivial = parse("component P path 2\ncomponent Q cycle 1\n");
    auto single = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto fa = fingerprint(trivial), fb = fingerprint(single);
    CHECK(fa.digest() != fb.digest());
    CHECK(!fingerprint_mismatch(fa, fb, true, false).empty());
}
