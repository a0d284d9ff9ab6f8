#include "inca/sum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "inca/errors.hpp"

namespace inca {
namespace {

void require_same_graph(const GaussDiagram& m1, const GaussDiagram& m2) {
    bool same = m1.component_count() == m2.component_count();
    for (int i = 0; same && i < m1.component_count(); ++i) {
        const Component &a = m1.component(i), &b = m2.component(i);
        same = a.name == b.name && a.kind == b.kind && a.size == b.size;
    }
    if (!same) throw std::invalid_argument("connect sum: underlying graphs differ");
}

}  // namespace

GaussDiagram connect_sum(const GaussDiagram& m1, const GaussDiagram& m2) {
    require_valid(m1);
    require_valid(m2);
    require_same_graph(m1, m2);

    auto s1 = support(m1), s2 = support(m2);
    std::vector<VertexRef> overlap;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(overlap));
    if (!overlap.empty())
        throw std::invalid_argument("connect sum: acting supports overlap at " +
                                    to_string(overlap.front(), m1));

    GaussDiagram out = m1;
    for (const auto& it : m2.interactions()) {
        if (out.interaction_on(it.edge))
            throw std::invalid_argument("connect sum: edge " + to_string(it.edge, m1) +
                                        " carries an interaction on both sides");
        out.add_interaction(it);
    }
    for (const auto& v : m2.marks()) out.add_mark(v);
    return out;
}

std::pair<GaussDiagram, GaussDiagram> split(const GaussDiagram& m,
                                            const std::vector<VertexRef>& agents) {
    require_valid(m);
    auto sup = support(m);
    std::set<VertexRef> inside(agents.begin(), agents.end());
    for (const auto& a : inside)
        if (!std::binary_search(sup.begin(), sup.end(), a))
            throw std::invalid_argument("split: " + to_string(a, m) + " is not an acting agent");

    GaussDiagram left = trivial_on(m), right = trivial_on(m);
    for (const auto& it : m.interactions())
        (inside.count(it.agent) ? left : right).add_interaction(it);
    return {left, right};
}

Factorization prime_factorize(const GaussDiagram& m, const SearchBudget& budget) {
    require_valid(m);
    Factorization out;
    out.base = underlying_graph(m);
    for (const auto& agent : support(m)) {
        Factor f;
        f.agent = agent;
        f.diagram = split(m, {agent}).first;
        f.triviality = is_trivial(f.diagram, budget);
        f.fp = fingerprint(f.diagram);
        if (f.triviality.unknown()) out.exhaustive = false;
        if (f.triviality.yes())
            out.units.push_back(std::move(f));
        else
            out.factors.push_back(std::move(f));
    }
    return out;
}

namespace {

// Hopcroft-Karp-free perfect matching on certified-equivalent pairs; buckets
// stay tiny. Returns false when some left factor cannot be matched.
bool perfect_match(const std::vector<const Factor*>& left,
                   const std::vector<const Factor*>& right, const SearchBudget& budget) {
    if (left.size() != right.size()) return false;
    const int n = static_cast<int>(left.size());
    std::vector<std::vector<int>> ok(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (equivalent(left[i]->diagram, right[j]->diagram, budget).yes())
                ok[i].push_back(j);

    std::vector<int> match(n, -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int i, std::vector<bool>& used) {
        for (int j : ok[i]) {
            if (used[j]) continue;
            used[j] = true;
            if (match[j] < 0 || augment(match[j], used)) {
                match[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; ++i) {
        std::vector<bool> used(n, false);
        if (!augment(i, used)) return false;
    }
    return true;
}

}  // namespace

Verdict factors_match(const Factorization& f1, const Factorization& f2,
                      const SearchBudget& budget) {
    if (f1.base.code != f2.base.code) return {Verdict::Kind::No, {}, "underlying-graph"};

    // A factor whose fingerprint matches the trivial diagram's may be a unit
    // whose budgeted triviality check simply ran out; such factors can never
    // justify a No, only block a Yes.
    auto trivial_digest = [](const Factorization& f) -> std::string {
        if (!f.factors.empty()) return fingerprint(trivial_on(f.factors.front().diagram)).digest();
        if (!f.units.empty()) return fingerprint(trivial_on(f.units.front().diagram)).digest();
        return {};
    };
    std::string td = trivial_digest(f1);
    if (td.empty()) td = trivial_digest(f2);

    std::map<std::string, std::vector<const Factor*>> b1, b2;
    std::vector<const Factor*> amb1, amb2;
    for (const auto& f : f1.factors) {
        std::string d = f.fp.digest();
        (d == td ? amb1 : b1[d]).push_back(&f);
    }
    for (const auto& f : f2.factors) {
        std::string d = f.fp.digest();
        (d == td ? amb2 : b2[d]).push_back(&f);
    }

    if (b1.size() != b2.size()) return {Verdict::Kind::No, {}, "factor-fingerprint-histogram"};
    for (const auto& [digest, fs] : b1) {
        auto it = b2.find(digest);
        if (it == b2.end() || it->second.size() != fs.size())
            return {Verdict::Kind::No, {}, "factor-fingerprint-histogram"};
    }

    for (const auto& [digest, left] : b1)
        if (!perfect_match(left, b2.at(digest), budget)) return {Verdict::Kind::Unknown, {}, {}};
    if (!amb1.empty() || !amb2.empty())
        if (!perfect_match(amb1, amb2, budget)) return {Verdict::Kind::Unknown, {}, {}};
    return {Verdict::Kind::Yes, {}, {}};
}

}  // namespace inca
