#include "inca/fingerprint.hpp"

#include <sstream>

#include "inca/canonical.hpp"
#include "inca/coloring.hpp"
#include "inca/linking.hpp"

namespace inca {

const std::vector<MultiQuandle>& default_panel() {
    static const std::vector<MultiQuandle> panel = {
        trivial_quandle(3),
        dihedral_quandle(3),
        dihedral_quandle(5),
        dihedral_quandle(7),
    };
    return panel;
}

Fingerprint fingerprint(const GaussDiagram& m, const std::vector<MultiQuandle>& panel) {
    Fingerprint fp;
    fp.underlying = underlying_graph(m).code;
    fp.unframed_linking = linking_graph(m, LinkingVariant::Unframed).code;
    fp.reduced_unframed = linking_graph(m, LinkingVariant::ReducedUnframed).code;
    for (const auto& q : panel) fp.colorings.emplace_back(q.name, count_colorings(m, q));
    return fp;
}

Fingerprint fingerprint(const GaussDiagram& m) { return fingerprint(m, default_panel()); }

std::string Fingerprint::digest() const {
    std::ostringstream out;
    out << underlying << '\n' << unframed_linking << '\n' << reduced_unframed << '\n';
    for (const auto& [name, count] : colorings) out << name << '=' << count << ';';
    return out.str();
}

std::string fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b, bool stable,
                                 bool use_false) {
    for (std::size_t i = 0; i < a.colorings.size() && i < b.colorings.size(); ++i)
        if (a.colorings[i] != b.colorings[i])
            return "colorings[" + a.colorings[i].first + "]";
    if (!use_false && a.reduced_unframed != b.reduced_unframed) return "linking:reduced-unframed";
    if (!stable && !use_false) {
        if (a.unframed_linking != b.unframed_linking) return "linking:unframed";
        if (a.underlying != b.underlying) return "underlying-graph";
    }
    return {};
}

}  // namespace inca
