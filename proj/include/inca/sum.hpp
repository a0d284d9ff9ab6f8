#pragma once

#include <vector>

#include "inca/canonical.hpp"
#include "inca/diagram.hpp"
#include "inca/fingerprint.hpp"
#include "inca/search.hpp"

namespace inca {

// Union of the interaction functions on a shared underlying graph. Requires
// identical component lists (names, kinds, sizes), disjoint acting supports,
// and no edge carrying an interaction on both sides; each failure is reported
// distinctly. Marks are unioned.
GaussDiagram connect_sum(const GaussDiagram& m1, const GaussDiagram& m2);

// (restriction of the interactions to agents in A, restriction to the rest),
// both on m's graph and both keeping m's marks. connect_sum of the two halves
// reproduces m exactly. Requires A to be a subset of support(m).
std::pair<GaussDiagram, GaussDiagram> split(const GaussDiagram& m,
                                            const std::vector<VertexRef>& agents);

struct Factor {
    GaussDiagram diagram;  // single-agent restriction on m's graph
    VertexRef agent;
    Verdict triviality;
    Fingerprint fp;
};

struct Factorization {
    UnderlyingGraph base;
    std::vector<Factor> factors;  // the computed prime multiset
    std::vector<Factor> units;    // certified-trivial factors, dropped from the multiset
    bool exhaustive{true};        // false when any triviality verdict is Unknown
};

// Agent-wise factorization: one factor per acting agent, each with a budgeted
// triviality verdict. connect-summing factors and units reproduces m.
Factorization prime_factorize(const GaussDiagram& m, const SearchBudget& budget);

// Multiset equality of the prime factors up to budgeted equivalence: greedy
// fingerprint bucketing, then pairwise equivalent() inside buckets. Yes needs
// a perfect matching of certified-equivalent factors; No only on an invariant
// mismatch (base graph or fingerprint histogram).
Verdict factors_match(const Factorization& f1, const Factorization& f2,
                      const SearchBudget& budget);

}  // namespace inca
