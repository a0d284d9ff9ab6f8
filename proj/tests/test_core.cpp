#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "doctest.h"
#include "inca/canonical.hpp"
#include "inca/diagram.hpp"
#include "inca/errors.hpp"
#include "inca/io.hpp"

using namespace inca;

namespace {

GaussDiagram parse(const std::string& body) { return parse_diagram("inca v1\n" + body); }

}  // namespace

TEST_CASE("validate accepts a well-formed one-cycle diagram") {
    GaussDiagram m;
    m.add_component("q", ComponentKind::Cycle, 1);
    CHECK(validate(m).empty());
}

TEST_CASE("validate flags out-of-range references") {
    GaussDiagram m;
    m.add_component("q", ComponentKind::Cycle, 3);
    m.add_interaction({EdgeRef{0, 5}, VertexRef{0, 0}, Sign::Pos});
    auto v = validate(m);
    REQUIRE(v.size() == 1);
    CHECK(v.front().find("q[5]") != std::string::npos);
}

TEST_CASE("validate flags duplicate interactions on one edge") {
    GaussDiagram m;
    m.add_component("q", ComponentKind::Cycle, 3);
    m.add_interaction({EdgeRef{0, 0}, VertexRef{0, 0}, Sign::Pos});
    m.add_interaction({EdgeRef{0, 0}, VertexRef{0, 2}, Sign::Neg});
    auto v = validate(m);
    REQUIRE(v.size() == 1);
    CHECK(v.front().find("more than one interaction") != std::string::npos);
}

TEST_CASE("support collects acting agents as a set") {
    GaussDiagram m;
    m.add_component("p", ComponentKind::Path, 3);
    m.add_component("q", ComponentKind::Cycle, 1);
    CHECK(support(m).empty());
    m.add_interaction({EdgeRef{0, 0}, VertexRef{1, 0}, Sign::Pos});
    CHECK(support(m) == std::vector<VertexRef>{VertexRef{1, 0}});
    m.add_interaction({EdgeRef{0, 1}, VertexRef{1, 0}, Sign::Neg});
    CHECK(support(m) == std::vector<VertexRef>{VertexRef{1, 0}});
}

TEST_CASE("edge and vertex counts follow the kind") {
    for (int n = 1; n <= 5; ++n) {
        GaussDiagram m;
        m.add_component("p", ComponentKind::Path, n);
        m.add_component("q", ComponentKind::Cycle, n);
        CHECK(m.component(0).edge_count() == n - 1);
        CHECK(m.component(1).edge_count() == n);
        CHECK(m.vertex_count() == 2 * n);
    }
}

TEST_CASE("canonical codes ignore component order and names") {
    auto a = parse("component A path 2\ncomponent B cycle 3\ninteract A[0] by B.1 +\n");
    auto b = parse("component X cycle 3\ncomponent Y path 2\ninteract Y[0] by X.1 +\n");
    CHECK(canonical_code(a) == canonical_code(b));
}

TEST_CASE("canonical codes ignore cycle rotation") {
    auto a = parse("component C cycle 4\ncomponent D cycle 1\ninteract C[0] by D.0 +\nagent C.2\n");
    auto b = parse("component C cycle 4\ncomponent D cycle 1\ninteract C[3] by D.0 +\nagent C.1\n");
    CHECK(canonical_code(a) == canonical_code(b));
}

TEST_CASE("sign flips change the canonical code") {
    auto a = parse("component C cycle 3\ninteract C[0] by C.2 +\n");
    auto b = parse("component C cycle 3\ninteract C[0] by C.2 -\n");
    CHECK(canonical_code(a) != canonical_code(b));

    // Exhaustive oracle on the 3-vertex example: no rotation maps a onto b.
    for (int r = 0; r < 3; ++r) {
        GaussDiagram rot;
        rot.add_component("C", ComponentKind::Cycle, 3);
        rot.add_interaction({EdgeRef{0, (0 + r) % 3}, VertexRef{0, (2 + r) % 3}, Sign::Pos});
        CHECK(rot != b);
    }
}

TEST_CASE("canonicalize is idempotent and valid") {
    auto m = parse(
        "component A path 3\ncomponent B cycle 2\ncomponent C cycle 2\n"
        "interact A[0] by B.1 +\ninteract B[0] by C.0 -\nagent C.1\n");
    auto c1 = canonical(m);
    CHECK(validate(c1.diagram).empty());
    auto c2 = canonical(c1.diagram);
    CHECK(c1.code == c2.code);
    CHECK(c1.diagram == c2.diagram);
}

TEST_CASE("canonical vertex map tracks relabeling") {
    auto m = parse("component A path 2\ncomponent B cycle 3\ninteract A[0] by B.2 -\n");
    auto c = canonical(m);
    VertexRef image = c.vertex_map[1][2];  // B.2, the acting agent
    CHECK(c.diagram.acts(image));
}

TEST_CASE("underlying graph forgets interactions and keeps marks") {
    auto a = parse("component P path 2\ncomponent Q cycle 1\nagent Q.0\n");
    auto b = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\nagent Q.0\n");
    auto ua = underlying_graph(a), ub = underlying_graph(b);
    CHECK(ua == ub);
    CHECK(ua.shape == std::vector<std::pair<ComponentKind, int>>{
                          {ComponentKind::Path, 2}, {ComponentKind::Cycle, 1}});
    CHECK(ua.graph.marks().size() == 1);

    auto c = parse("component Q cycle 4\n");
    auto uc = underlying_graph(c);
    CHECK(uc.graph.marks().empty());
    CHECK(uc.shape == std::vector<std::pair<ComponentKind, int>>{{ComponentKind::Cycle, 4}});
}

TEST_CASE("random diagrams are valid, seed-deterministic, and honor counts") {
    RandomSpec spec;
    spec.components = {{ComponentKind::Cycle, 4}, {ComponentKind::Path, 3}};
    spec.interactions = 4;
    spec.marks = 1;
    spec.seed = 42;
    auto a = random_diagram(spec);
    auto b = random_diagram(spec);
    CHECK(a == b);
    CHECK(validate(a).empty());
    CHECK(a.interaction_count() == 4);
    CHECK(a.marks().size() == 1);
    spec.seed = 43;
    CHECK(random_diagram(spec) != a);
}

TEST_CASE("serialize round-trips the canonical code") {
    auto m = parse(
        "component A path 3\ncomponent B cycle 2\n"
        "interact A[1] by B.0 +\ninteract B[1] by A.0 -\nagent A.2\n");
    auto text = serialize(m);
    auto back = parse_diagram(text);
    CHECK(canonical_code(back) == canonical_code(m));
    CHECK(serialize(back) == text);
}

TEST_CASE("trivial diagram serializes to exactly two non-comment lines") {
    auto m = parse("component Q cycle 1\n");
    auto text = serialize(m);
    int lines = 0;
    for (std::size_t pos = 0; pos < text.size();) {
        auto end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        if (!line.empty() && line[0] != '#') ++lines;
        pos = end + 1;
    }
    CHECK(lines == 2);
}

TEST_CASE("parser reports positions for semantic errors") {
    try {
        parse_diagram("inca v1\ncomponent P path 2\ninteract P[3] by P.0 +\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("parser rejects duplicate interactions with a position") {
    try {
        parse_diagram(
            "inca v1\ncomponent P path 3\ncomponent Q cycle 1\n"
            "interact P[0] by Q.0 +\ninteract P[0] by Q.0 -\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 5);
    }
}

TEST_CASE("dot export has one node per vertex and sign labels") {
    auto m = parse("component P path 2\ncomponent Q cycle 1\ninteract P[0] by Q.0 +\n");
    auto dot = export_dot(m);
    CHECK(dot.find("label=\"+\"") != std::string::npos);
    std::size_t nodes = 0, pos = 0;
    while ((pos = dot.find("shape=circle", pos)) != std::string::npos) {
        ++nodes;
        pos += 1;
    }
    CHECK(nodes == 3);
}

namespace {

// Exhaustive isomorphism decision: try every component bijection (respecting
// kind/size) and every cycle rotation.
bool isomorphic_oracle(const GaussDiagram& a, const GaussDiagram& b) {
    const int k = a.component_count();
    if (k != b.component_count()) return false;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        bool shape_ok = true;
        for (int i = 0; i < k && shape_ok; ++i) {
            const Component& ca = a.component(i);
            const Component& cb = b.component(perm[i]);
            shape_ok = ca.kind == cb.kind && ca.size == cb.size;
        }
        if (!shape_ok) continue;

        // Odometer over rotations of a's cycle components.
        std::vector<int> rot(k, 0);
        for (;;) {
            auto map_vertex = [&](VertexRef v) -> VertexRef {
                const Component& c = a.component(v.component);
                int p = v.position;
                if (c.kind == ComponentKind::Cycle) p = (p - rot[v.component] + c.size) % c.size;
                return {perm[v.component], p};
            };
            bool match = true;
            for (const auto& it : a.interactions()) {
                VertexRef t = map_vertex({it.edge.component, it.edge.tail});
                const Interaction* other = b.interaction_on(EdgeRef{t.component, t.position});
                if (!other || other->agent != map_vertex(it.agent) || other->sign != it.sign) {
                    match = false;
                    break;
                }
            }
            if (match && a.interaction_count() == b.interaction_count() &&
                a.marks().size() == b.marks().size()) {
                for (const auto& v : a.marks())
                    if (!b.marked(map_vertex(v))) {
                        match = false;
                        break;
                    }
                if (match) return true;
            }

            int i = 0;
            for (; i < k; ++i) {
                if (a.component(i).kind != ComponentKind::Cycle) continue;
                if (++rot[i] < a.component(i).size) break;
                rot[i] = 0;
            }
            if (i == k) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical code equality decides isomorphism (oracle cross-check)") {
    std::vector<GaussDiagram> pool;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomSpec spec;
        std::mt19937_64 rng(seed);
        int comps = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < comps; ++i)
            spec.components.emplace_back(rng() % 2 ? ComponentKind::Cycle : ComponentKind::Path,
                                         1 + static_cast<int>(rng() % 4));
        int edges = 0;
        for (auto [kind, size] : spec.components)
            edges += kind == ComponentKind::Cycle ? size : size - 1;
        spec.interactions = edges == 0 ? 0 : static_cast<int>(rng() % (edges + 1));
        spec.marks = static_cast<int>(rng() % 2);
        spec.seed = rng();
        pool.push_back(random_diagram(spec));
    }
    int equal_codes = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            bool same_code = canonical_code(pool[i]) == canonical_code(pool[j]);
            bool iso = isomorphic_oracle(pool[i], pool[j]);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(same_code == iso);
            equal_codes += same_code && i != j;
        }
    // The pool is small and diagrams are tiny, so some coincidences must occur
    // or the comparison above would be vacuous.
    CHECK(equal_codes > 0);
}

TEST_CASE("desk-scale diagrams canonicalize quickly") {
    RandomSpec spec;
    spec.components = {{ComponentKind::Cycle, 16},
                       {ComponentKind::Path, 16},
                       {ComponentKind::Cycle, 16},
                       {ComponentKind::Path, 16}};
    spec.interactions = 20;
    spec.marks = 2;
    spec.seed = 424242;
    GaussDiagram m = random_diagram(spec);
    REQUIRE(m.vertex_count() == 64);
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 20; ++i) canonical(m);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count() /
        20.0;
#ifdef NDEBUG
    CHECK(ms < 10.0);
#else
    CHECK(ms < 400.0);  // debug/sanitizer builds only get a sanity bound
#endif
}
