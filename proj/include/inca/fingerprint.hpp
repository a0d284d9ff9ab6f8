#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inca/diagram.hpp"
#include "inca/quandle.hpp"

namespace inca {

// Aggregate of cheap move-invariants used as search certificates. Per-entry
// invariance:
//   underlying          R1/R2/R3 (graph and marks untouched)
//   unframed_linking    R1/R2/R3
//   reduced_unframed    R1/R2/R3 and (de)stabilization
//   colorings           R1/R2/R3 and (de)stabilization; also false
//                       (de)stabilization for single-op panels
struct Fingerprint {
    std::string underlying;
    std::string unframed_linking;
    std::string reduced_unframed;
    std::vector<std::pair<std::string, long long>> colorings;

    std::string digest() const;
    bool operator==(const Fingerprint&) const = default;
};

// trivial:3, dihedral:3, dihedral:5, dihedral:7.
const std::vector<MultiQuandle>& default_panel();

Fingerprint fingerprint(const GaussDiagram& m, const std::vector<MultiQuandle>& panel);
Fingerprint fingerprint(const GaussDiagram& m);

// Name of the first entry that differs and is invariant for the given move
// set; empty when no usable entry differs.
std::string fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b, bool stable,
                                 bool use_false);

}  // namespace inca
