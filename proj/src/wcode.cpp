#include "inca/wcode.hpp"

#include <sstream>

#include "inca/canonical.hpp"
#include "inca/moves.hpp"

namespace inca {

WCode w_code(const GaussDiagram& m) {
    require_valid(m);
    GaussDiagram cur = m;
    // Contract until every non-loop edge carries an interaction. The merged
    // role sets do not depend on contraction order.
    for (;;) {
        bool contracted = false;
        for (int ci = 0; ci < cur.component_count() && !contracted; ++ci) {
            const Component& c = cur.component(ci);
            for (int j = 0; j < c.edge_count(); ++j) {
                EdgeRef e{ci, j};
                if (cur.interaction_on(e)) continue;
                if (cur.tail_of(e) == cur.head_of(e)) continue;  // bare loop stays
                cur = false_destabilize(cur, e);
                contracted = true;
                break;
            }
        }
        if (!contracted) break;
    }

    GaussDiagram fix = canonical(cur).diagram;
    WCode out;
    std::ostringstream text;
    for (int ci = 0; ci < fix.component_count(); ++ci) {
        const Component& c = fix.component(ci);
        out.kinds.push_back(c.kind);
        std::vector<WCode::Entry> seq;
        text << (c.kind == ComponentKind::Cycle ? "cycle" : "path") << ':';
        for (int j = 0; j < c.edge_count(); ++j) {
            const Interaction* it = fix.interaction_on(EdgeRef{ci, j});
            if (!it) continue;  // only the bare loop of a trivial cycle
            seq.push_back({it->agent, it->sign});
            text << '(' << it->agent.component << '.' << it->agent.position << ' '
                 << sign_char(it->sign) << ')';
        }
        out.per_component.push_back(std::move(seq));
        text << ';';
    }
    out.text = text.str();
    return out;
}

}  // namespace inca
