#pragma once

#include <map>
#include <string>
#include <vector>

#include "strathol/complex.hpp"
#include "strathol/flags.hpp"

namespace strathol {

// Standard-neighborhood subcomplex S_p: the full subcomplex of sd(K) on the
// barycenters b(s) such that p lies in the label set of s, or every label
// of s is strictly below p.
Subcomplex sim_stan_hood(const StratComplex& K, const Label& p);

// U(I): intersection of sim_stan_hood(K, p) over p in I.
Subcomplex stan_hood_flag(const StratComplex& K, const RegularFlag& I);

// Simplicial link: full subcomplex of sd(K) on barycenters whose label set
// is exactly the entry set of I.
Subcomplex simplicial_link(const StratComplex& K, const RegularFlag& I);

// Full subcomplex of sd(K) on barycenters with maximal label >= p; a
// combinatorial stand-in for the open stratified piece of K at or above p.
StratComplex stratum_ge_model(const StratComplex& K, const Label& p);

struct HolinkModel {
    RegularFlag flag;
    StratComplex complex;
    std::string provenance;  // construction path
};

// The homotopy-link model for a regular flag I: the >= max(I) stratum model
// of the carrier of U(I). Computes inside a double subdivision of K.
HolinkModel holink_model(const StratComplex& K, const RegularFlag& I);

// Holink models for every regular flag, with the subcomplex inclusions
// model(I) into model(I') recorded for proper subflags I' of I. The
// inclusions hold on the nose as simplex sets thanks to canonical
// barycenter naming; construction re-checks this.
struct ComplementDiagram {
    std::map<std::vector<Label>, HolinkModel> models;
    // pairs (I, I'), I' a proper subflag of I: model(I) is a subcomplex of model(I')
    std::vector<std::pair<std::vector<Label>, std::vector<Label>>> inclusions;
};

ComplementDiagram regular_complement_diagram(const StratComplex& K);

}  // namespace strathol
