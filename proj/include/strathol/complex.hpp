#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "strathol/flags.hpp"

namespace strathol {

using Vertex = std::string;
using Simplex = std::vector<Vertex>;  // sorted, no repeats

// Abstract simplicial complex with poset-labeled vertices; every simplex's
// labels form a chain. Simplices are stored explicitly (face-closed).
struct StratComplex {
    PosetPtr poset;
    std::map<Vertex, Label> labels;
    std::set<Simplex> simplices;

    bool contains(const Simplex& s) const { return simplices.count(s) != 0; }
    bool empty() const { return simplices.empty(); }
    int dim() const;
    std::vector<std::size_t> counts() const;  // simplices per dimension
    long long euler() const;

    bool operator==(const StratComplex& o) const;
    bool operator!=(const StratComplex& o) const { return !(*this == o); }
};

struct Subcomplex {
    StratComplex parent;
    std::set<Simplex> simplices;

    StratComplex carrier() const;
    bool operator==(const Subcomplex& o) const {
        return parent == o.parent && simplices == o.simplices;
    }
};

// '|' joins sorted vertex identifiers into a barycenter name, so it is
// reserved and rejected in user-supplied vertex identifiers.
std::string barycenter_name(const Simplex& s);

// Validating constructor used by everything that assembles a complex.
StratComplex make_complex(PosetPtr poset, std::map<Vertex, Label> labels,
                          std::set<Simplex> simplices);

StratComplex from_maximal(PosetPtr poset,
                          const std::vector<std::pair<Vertex, Label>>& labeled_vertices,
                          const std::vector<Simplex>& maximal_simplices);

Flag flag_of(const StratComplex& K, const Simplex& s);
Label max_label(const StratComplex& K, const Simplex& s);
StratComplex restrict_le(const StratComplex& K, const Label& p);

struct SdResult {
    StratComplex complex;
    std::map<Vertex, Simplex> carrier;  // barycenter name -> simplex of the source
};
SdResult barycentric_subdivision_with_carriers(const StratComplex& K);
StratComplex barycentric_subdivision(const StratComplex& K);

Subcomplex full_subcomplex(const StratComplex& K, const std::set<Vertex>& verts);

struct GlueResult {
    StratComplex complex;  // Y, the pushout of X <- A -> B
    Subcomplex x_part, b_part, a_part;
    std::map<Vertex, Vertex> b_vertex_map;  // B vertex -> Y vertex
};

// Pushout along an injective label-preserving simplicial embedding of A into X.
// B vertices outside A keep their identifiers when free, otherwise get a "~k"
// suffix. Fails with CollapseError when a B simplex outside A would land on an
// existing X simplex, which is exactly what would break "X meets B in A".
GlueResult glue(const StratComplex& X, const StratComplex& B, const Subcomplex& A,
                const std::map<Vertex, Vertex>& embed);

}  // namespace strathol
