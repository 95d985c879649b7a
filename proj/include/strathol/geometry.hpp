#pragma once

#include <optional>
#include <set>
#include <vector>

#include "strathol/flags.hpp"
#include "strathol/rational.hpp"

namespace strathol {

// A point of the realized stratified simplex |Delta^J|: one exact
// nonnegative rational per entry of J, summing to 1.
struct SimplexPoint {
    Flag flag;
    std::vector<Rat> coords;

    bool operator==(const SimplexPoint& o) const {
        return flag == o.flag && coords == o.coords;
    }
    bool operator!=(const SimplexPoint& o) const { return !(*this == o); }
};

SimplexPoint make_point(Flag J, std::vector<Rat> coords);

// max label over positions with positive coordinate
Label point_stratum(const SimplexPoint& x);

// s_p, s_{<=p}, s_{<p}, s_{not<=p}, s_{not<p}: coordinate mass over the
// positions whose label satisfies the mode predicate against p.
Rat s_coord(const SimplexPoint& x, const Label& p, RestrictMode mode);

// t_p = s_{not<=p} / s_{not<p}; empty when the denominator vanishes.
std::optional<Rat> t_coord(const SimplexPoint& x, const Label& p);

// Piecewise-linear function [0,1] -> [0,1] through (breakpoints[i],
// values[i]); positive at every positive argument.
struct PLFunction {
    std::vector<Rat> breakpoints;  // increasing, first 0, last 1
    std::vector<Rat> values;
};

PLFunction make_pl_function(std::vector<Rat> breakpoints, std::vector<Rat> values);
PLFunction phi_one();  // constant 1
Rat pl_eval(const PLFunction& phi, const Rat& s);

// membership in the phi-standard neighborhood: s_{not<=p} <= phi(s_{not<p}) * s_p
bool in_phi_hood(const SimplexPoint& x, const Label& p, const PLFunction& phi);

// Join weights 1/2, 1/4, ..., 1/2^n, 1/2^n over the blocks of equal labels,
// spread uniformly inside each block.
SimplexPoint weighted_barycenter(const Flag& J);

// The subdivision map Psi on a point of sd(Delta^J): an affine combination
// of embedded weighted barycenters along a strictly increasing chain of
// subflags, each subflag given by its set of positions in J.
SimplexPoint psi_eval(const Flag& J, const std::vector<std::set<std::size_t>>& chain,
                      const std::vector<Rat>& weights);

// Retraction to the <=p part: renormalize the <=p block, zero the rest.
SimplexPoint rho(const SimplexPoint& x, const Label& p);

// Straight-line homotopy from the identity (t=0) to rho (t=1): the <=p
// block is rescaled to mass (1-t)s_{<=p} + t.
SimplexPoint rho_homotopy(const SimplexPoint& x, const Label& p, const Rat& t);

// Standard aspire R_I(x, t) = sum over p in I of t_p rho^p(x). Requires x
// to lie in every standard neighborhood (phi = 1) of the flag's labels; t
// is a point of Delta^I.
SimplexPoint aspire_eval(const SimplexPoint& x, const RegularFlag& I, const SimplexPoint& t);

// The t-coordinate reparametrization behind Phi_p, with hat = phi/(1+phi):
//   t >= 1/2: 2t - 1 + (2 - 2t) hat,   t <= 1/2: 2t hat.
Rat reparam_t(const Rat& t, const Rat& phi_value);

// Phi_p: rescale the p and not<=p sub-blocks of the not<p mass to fractions
// (1 - t~) and t~. Identity when s_{not<p} = 0 or no position carries p.
SimplexPoint phi_reparam(const SimplexPoint& x, const Label& p, const PLFunction& phi);

}  // namespace strathol
