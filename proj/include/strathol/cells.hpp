#pragma once

#include <map>
#include <string>
#include <vector>

#include "strathol/complex.hpp"
#include "strathol/flags.hpp"
#include "strathol/poset.hpp"

namespace strathol {

// A stratified Delta-complex: cells with ordered simplicial faces, where
// boundary identifications are allowed (a triangle may reuse an edge, an
// edge may be a loop). An n-cell lists its n+1 faces d_0..d_n by id and
// carries a flag of n+1 labels, one per vertex position.
struct DeltaCell {
    std::string id;
    std::vector<std::string> faces;  // ids of (n-1)-cells, d_0..d_n; empty for 0-cells
    std::vector<Label> flag;         // weakly increasing, length n+1
};

struct DeltaComplex {
    PosetPtr poset;
    std::vector<std::vector<DeltaCell>> cells;  // cells[n] = the n-cells

    int dim() const { return static_cast<int>(cells.size()) - 1; }
    std::vector<std::size_t> counts() const;
    long long euler() const;
    const DeltaCell* find(int dim, const std::string& id) const;
    const DeltaCell& at(int dim, const std::string& id) const;  // UnknownElement if absent
};

// Checks id uniqueness (global), face list arity and existence, and that
// every flag is a valid chain in the poset.
DeltaComplex make_delta_complex(PosetPtr poset, std::vector<std::vector<DeltaCell>> cells);

struct ValidationIssue {
    enum class Kind { face_identity, flag_mismatch, precursor_cycle };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Diagnostics: face identities d_i d_j = d_{j-1} d_i (i < j), flag
// compatibility flag(d_i c) = flag(c) minus position i, and acyclicity of
// the precursor (face-reachability) relation.
ValidationReport validate(const DeltaComplex& D);

// Throws FaceIdentityViolation / FlagMismatch / PrecursorCycle for the
// first issue validate() finds.
void require_valid(const DeltaComplex& D);

// Barycentric subdivision. n-cells of the result are canonical pairs
// (carrier cell c, chain S_0 < ... < S_n of nonempty vertex-index subsets
// with S_n the full index set of c); see delta_sd in src/cells.cpp for the
// identification rule. Throws InvalidComplex when validate(D) fails.
DeltaComplex delta_sd(const DeltaComplex& D);

// Ordered vertex list v_0..v_n of a cell (ids of 0-cells).
std::vector<std::string> cell_vertices(const DeltaComplex& D, int dim, const std::string& id);

// Flattening. Succeeds iff every cell has pairwise distinct vertices and
// distinct cells have distinct vertex sets; throws NotSimplicial naming the
// offending cell (pair) otherwise. Applying delta_sd twice always clears
// both obstructions.
StratComplex to_strat_complex(const DeltaComplex& D);

}  // namespace strathol
