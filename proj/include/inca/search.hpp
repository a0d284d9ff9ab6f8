#pragma once

#include <string>
#include <vector>

#include "inca/canonical.hpp"
#include "inca/diagram.hpp"
#include "inca/moves.hpp"

namespace inca {

// Hard limits; exceeding them yields Unknown, never a wrong answer.
struct SearchBudget {
    int max_depth{8};
    int max_states{20000};
    bool stable{false};     // include destabilize/stabilize
    bool use_false{false};  // include false (de)stabilization (w-tangle mode)
};

struct Verdict {
    enum class Kind { Yes, No, Unknown };
    Kind kind{Kind::Unknown};
    // Yes: instances applied to successive canonical forms (see replay).
    std::vector<MoveInstance> witness;
    // No: name of the differing move-invariant.
    std::string certificate;

    bool yes() const { return kind == Kind::Yes; }
    bool no() const { return kind == Kind::No; }
    bool unknown() const { return kind == Kind::Unknown; }
};

const char* verdict_name(Verdict::Kind k);

// Witness semantics: s0 = canonical(start); s_{k+1} = canonical(apply(s_k, w[k])).
GaussDiagram replay(const GaussDiagram& start, const std::vector<MoveInstance>& witness);

// Greedy interaction-count descent with R3 plateau exploration; deterministic,
// never increases the interaction count, result is move-equivalent to m.
GaussDiagram simplify(const GaussDiagram& m, const SearchBudget& budget);
std::pair<GaussDiagram, std::vector<MoveInstance>> simplify_with_path(const GaussDiagram& m,
                                                                      const SearchBudget& budget);

// Bidirectional BFS over canonical codes. Yes comes with a replayable witness,
// No only from a differing invariant, Unknown on budget exhaustion. Worker
// count never changes the verdict.
Verdict equivalent(const GaussDiagram& a, const GaussDiagram& b, const SearchBudget& budget,
                   int workers = 1);

// Yes iff a move path empties the interaction function.
Verdict is_trivial(const GaussDiagram& m, const SearchBudget& budget, int workers = 1);

struct TrivialAgentsReport {
    std::vector<VertexRef> certified;  // agents removable within budget (sound)
    int nontrivial_lower_bound{0};     // nonzero vectors in the reduced unframed linking graph
    bool exhaustive{false};            // no per-agent search hit a budget limit
};

TrivialAgentsReport trivial_agents(const GaussDiagram& m, const SearchBudget& budget);

struct ReducedGraphReport {
    UnderlyingGraph graph;  // budget-certified trivial agents contracted
    bool exhaustive{false};
};

ReducedGraphReport reduced_graph(const GaussDiagram& m, const SearchBudget& budget);

}  // namespace inca
