#include "inca/linking.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "inca/errors.hpp"

namespace inca {
namespace {

using Vec = std::vector<long long>;

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// The canonical code minimizes over component orderings (vector entries are
// permuted along) and cyclic rotation of each cycle's label sequence. Zero
// labels carry no position information in any variant: the stated moves only
// ever migrate a label across an inert neighbour, so the nonzero sequence is
// what the code records (plus kind and vertex count).
struct CodeInput {
    struct Comp {
        ComponentKind kind;
        int size;
        std::vector<Vec> labels;  // nonzero labels in strand order
    };
    std::vector<Comp> comps;
};

std::string encode_min(const CodeInput& in, const char* prefix) {
    const int k = static_cast<int>(in.comps.size());

    // Permutation-invariant signature: own-entry kept apart, the rest sorted.
    auto signature = [&](int ci) {
        std::ostringstream s;
        const auto& c = in.comps[ci];
        s << static_cast<int>(c.kind) << ':' << c.size << ':' << c.labels.size() << ':';
        std::vector<std::string> parts;
        for (const auto& v : c.labels) {
            std::ostringstream p;
            p << v[ci] << '|';
            Vec rest;
            for (int j = 0; j < k; ++j)
                if (j != ci) rest.push_back(v[j]);
            std::sort(rest.begin(), rest.end());
            for (auto x : rest) p << x << ',';
            parts.push_back(p.str());
        }
        std::sort(parts.begin(), parts.end());
        for (const auto& p : parts) s << p << ';';
        return s.str();
    };

    std::map<std::string, std::vector<int>> classes;
    for (int i = 0; i < k; ++i) classes[signature(i)].push_back(i);

    std::vector<std::vector<int>> class_members;
    std::vector<bool> class_fixed;
    for (auto& [key, members] : classes) {
        bool blank = std::all_of(members.begin(), members.end(), [&](int i) {
            return in.comps[i].labels.empty();
        });
        class_members.push_back(members);
        class_fixed.push_back(blank || members.size() == 1);
    }

    std::vector<int> slot_to_comp, comp_to_slot(k), rotation(k, 0);
    std::vector<std::int64_t> best;
    bool have_best = false;
    int budget = 200000;

    auto encode = [&]() {
        std::vector<std::int64_t> t;
        for (int s = 0; s < k; ++s) {
            const auto& c = in.comps[slot_to_comp[s]];
            t.push_back(static_cast<int>(c.kind));
            t.push_back(c.size);
        }
        t.push_back(-7);
        for (int s = 0; s < k; ++s) {
            int ci = slot_to_comp[s];
            const auto& c = in.comps[ci];
            const int L = static_cast<int>(c.labels.size());
            t.push_back(-8);
            for (int i = 0; i < L; ++i) {
                const Vec& v = c.labels[(i + rotation[ci]) % std::max(L, 1)];
                t.push_back(-9);
                for (int s2 = 0; s2 < k; ++s2) t.push_back(v[slot_to_comp[s2]]);
            }
        }
        return t;
    };

    std::vector<int> rotatable;
    for (int i = 0; i < k; ++i)
        if (in.comps[i].kind == ComponentKind::Cycle && in.comps[i].labels.size() > 1)
            rotatable.push_back(i);

    std::function<void(std::size_t)> rotations = [&](std::size_t idx) {
        if (idx == rotatable.size()) {
            if (--budget < 0) throw resource_limit("linking code symmetry budget exceeded");
            auto t = encode();
            if (!have_best || t < best) {
                best = std::move(t);
                have_best = true;
            }
            return;
        }
        int ci = rotatable[idx];
        for (int r = 0; r < static_cast<int>(in.comps[ci].labels.size()); ++r) {
            rotation[ci] = r;
            rotations(idx + 1);
        }
        rotation[ci] = 0;
    };

    std::function<void(std::size_t)> orders = [&](std::size_t cls) {
        if (cls == class_members.size()) {
            slot_to_comp.clear();
            for (const auto& ms : class_members)
                slot_to_comp.insert(slot_to_comp.end(), ms.begin(), ms.end());
            for (int s = 0; s < k; ++s) comp_to_slot[slot_to_comp[s]] = s;
            rotations(0);
            return;
        }
        if (class_fixed[cls]) {
            orders(cls + 1);
            return;
        }
        auto& ms = class_members[cls];
        std::sort(ms.begin(), ms.end());
        do {
            orders(cls + 1);
        } while (std::next_permutation(ms.begin(), ms.end()));
        std::sort(ms.begin(), ms.end());
    };
    orders(0);

    std::string out = prefix;
    for (auto x : best) {
        out.push_back(',');
        out += std::to_string(x);
    }
    return out;
}

}  // namespace

const char* linking_variant_name(LinkingVariant v) {
    switch (v) {
        case LinkingVariant::Full: return "full";
        case LinkingVariant::Unframed: return "unframed";
        case LinkingVariant::Reduced: return "reduced";
        case LinkingVariant::ReducedUnframed: return "reduced-unframed";
    }
    return "?";
}

LinkingVariant linking_variant_from_name(const std::string& name) {
    if (name == "full") return LinkingVariant::Full;
    if (name == "unframed") return LinkingVariant::Unframed;
    if (name == "reduced") return LinkingVariant::Reduced;
    if (name == "reduced-unframed") return LinkingVariant::ReducedUnframed;
    throw std::invalid_argument("unknown linking variant '" + name + "'");
}

LinkingGraph linking_graph(const GaussDiagram& m, LinkingVariant variant) {
    require_valid(m);
    const int k = m.component_count();
    LinkingGraph out;
    out.variant = variant;

    std::vector<std::vector<Vec>> vectors(k);
    for (int ci = 0; ci < k; ++ci)
        vectors[ci].assign(m.component(ci).size, Vec(k, 0));
    for (const auto& it : m.interactions())
        vectors[it.agent.component][it.agent.position][it.edge.component] +=
            it.sign == Sign::Pos ? 1 : -1;

    bool unframed = variant == LinkingVariant::Unframed || variant == LinkingVariant::ReducedUnframed;
    bool reduced = variant == LinkingVariant::Reduced || variant == LinkingVariant::ReducedUnframed;

    if (unframed)
        for (int ci = 0; ci < k; ++ci)
            for (auto& v : vectors[ci]) v[ci] = 0;

    out.components = m.components();
    if (reduced) {
        for (int ci = 0; ci < k; ++ci) {
            std::vector<Vec> kept;
            for (const auto& v : vectors[ci])
                if (!is_zero(v)) kept.push_back(v);
            if (kept.empty()) kept.push_back(Vec(k, 0));  // component marker
            out.components[ci].size = static_cast<int>(kept.size());
            vectors[ci] = std::move(kept);
        }
    }
    out.vectors = vectors;

    CodeInput in;
    for (int ci = 0; ci < k; ++ci) {
        CodeInput::Comp c;
        c.kind = out.components[ci].kind;
        c.size = out.components[ci].size;
        for (const auto& v : vectors[ci])
            if (!is_zero(v)) c.labels.push_back(v);
        in.comps.push_back(std::move(c));
    }
    std::string prefix = std::string("L:") + linking_variant_name(variant);
    out.code = encode_min(in, prefix.c_str());
    return out;
}

std::vector<long long> unframed_vector(const GaussDiagram& m, VertexRef v) {
    std::vector<long long> vec(m.component_count(), 0);
    for (const auto& it : m.interactions())
        if (it.agent == v) vec[it.edge.component] += it.sign == Sign::Pos ? 1 : -1;
    vec[v.component] = 0;
    return vec;
}

}  // namespace inca
