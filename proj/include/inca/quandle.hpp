#pragma once

#include <string>
#include <vector>

#include "inca/diagram.hpp"

namespace inca {

// A finite multi-quandle: a color set {0..size-1} with an inverse-closed
// family of binary operation tables. Axioms (checked by validate_quandle):
// idempotence x>x = x, reversibility of x -> x>y for every y, and
// distributivity (x>y)*z = (x*z)>(y*z) for every ordered pair of listed ops.
struct QuandleOp {
    std::string name;
    std::vector<std::vector<int>> table;  // table[x][y] = x > y
    int inverse{0};                       // index of the registered inverse op
};

struct MultiQuandle {
    std::string name;
    int size{1};
    std::vector<QuandleOp> ops;

    int apply(int op, int x, int y) const { return ops[op].table[x][y]; }
    // The op actually used for a signed interaction: Neg uses the registered inverse.
    int signed_apply(int op, Sign s, int x, int y) const {
        return s == Sign::Pos ? apply(op, x, y) : apply(ops[op].inverse, x, y);
    }
    int op_count() const { return static_cast<int>(ops.size()); }
};

// Exhaustive axiom check; empty result means the structure is a multi-quandle.
std::vector<std::string> validate_quandle(const MultiQuandle& q);
void require_valid(const MultiQuandle& q);

// x > y = x. Aut = all permutations.
MultiQuandle trivial_quandle(int n);
// x > y = (2y - x) mod n, self-inverse.
MultiQuandle dihedral_quandle(int n);

// Accepts "trivial:<n>", "dihedral:<n>", or a table document (see below).
MultiQuandle quandle_from_spec(const std::string& spec_or_text);

// Table document:
//   quandle v1
//   size <n>
//   op <name> inverse <name>
//   <n rows of n entries, row x listing x > y for y = 0..n-1>
MultiQuandle parse_quandle(const std::string& text);
std::string serialize_quandle(const MultiQuandle& q);

}  // namespace inca
