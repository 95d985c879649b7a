#include "strathol/geometry.hpp"

#include <algorithm>

namespace strathol {

namespace {

const Rat kZero = 0;
const Rat kOne = 1;

Rat pow2_inverse(std::size_t k) {  // 2^{-k}
    Int den = Int(1) << k;
    return Rat(1, den);
}

// positions of J whose label satisfies the mode predicate
std::vector<std::size_t> mode_positions(const Flag& J, const Label& p, RestrictMode mode) {
    J.poset->require(p);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < J.entries.size(); ++i)
        if (mode_matches(*J.poset, J.entries[i], p, mode)) out.push_back(i);
    return out;
}

}  // namespace

SimplexPoint make_point(Flag J, std::vector<Rat> coords) {
    if (J.entries.size() != coords.size())
        throw Error("point needs one coordinate per flag entry");
    if (coords.empty()) throw EmptyFlag("a point needs a nonempty flag");
    Rat sum = 0;
    for (const Rat& c : coords) {
        if (c < 0) throw Error("negative coordinate");
        sum += c;
    }
    if (sum != 1) throw Error("coordinates must sum to 1, got " + rat_to_string(sum));
    return SimplexPoint{std::move(J), std::move(coords)};
}

Label point_stratum(const SimplexPoint& x) {
    for (std::size_t i = x.coords.size(); i-- > 0;)
        if (x.coords[i] > 0) return x.flag.entries[i];
    throw Error("point has no positive coordinate");
}

Rat s_coord(const SimplexPoint& x, const Label& p, RestrictMode mode) {
    Rat sum = 0;
    for (std::size_t i : mode_positions(x.flag, p, mode)) sum += x.coords[i];
    return sum;
}

std::optional<Rat> t_coord(const SimplexPoint& x, const Label& p) {
    Rat bar = s_coord(x, p, RestrictMode::not_lt);
    if (bar == 0) return std::nullopt;
    return s_coord(x, p, RestrictMode::not_le) / bar;
}

PLFunction make_pl_function(std::vector<Rat> breakpoints, std::vector<Rat> values) {
    if (breakpoints.size() != values.size() || breakpoints.size() < 2)
        throw Error("a piecewise-linear function needs matching breakpoint and value lists");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw Error("breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw Error("breakpoints must be strictly increasing");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > 1) throw Error("values must lie in [0,1]");
        if (breakpoints[i] > 0 && values[i] == 0)
            throw Error("the function must be positive at positive arguments");
    }
    if (values[0] == 0 && !(values[1] > 0))
        throw Error("the function must be positive at positive arguments");
    return PLFunction{std::move(breakpoints), std::move(values)};
}

PLFunction phi_one() { return make_pl_function({0, 1}, {1, 1}); }

Rat pl_eval(const PLFunction& phi, const Rat& s) {
    if (s < 0 || s > 1) throw Error("argument outside [0,1]");
    const auto& b = phi.breakpoints;
    const auto& v = phi.values;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (s > b[i + 1]) continue;
        return v[i] + (v[i + 1] - v[i]) * (s - b[i]) / (b[i + 1] - b[i]);
    }
    return v.back();
}

bool in_phi_hood(const SimplexPoint& x, const Label& p, const PLFunction& phi) {
    Rat bar = s_coord(x, p, RestrictMode::not_lt);
    return s_coord(x, p, RestrictMode::not_le) <= pl_eval(phi, bar) * s_coord(x, p, RestrictMode::eq);
}

SimplexPoint weighted_barycenter(const Flag& J) {
    if (J.empty()) throw EmptyFlag("weighted barycenter of the empty flag");
    // block k of equal consecutive labels gets join weight 2^{-(k+1)},
    // except the last block, which gets 2^{-(m-1)} for m blocks
    std::vector<std::size_t> block_sizes;
    for (std::size_t i = 0; i < J.entries.size(); ++i) {
        if (i == 0 || J.entries[i] != J.entries[i - 1])
            block_sizes.push_back(1);
        else
            ++block_sizes.back();
    }
    const std::size_t m = block_sizes.size();
    std::vector<Rat> coords;
    coords.reserve(J.entries.size());
    for (std::size_t k = 0; k < m; ++k) {
        Rat w = (k + 1 < m) ? pow2_inverse(k + 1) : pow2_inverse(m - 1);
        Rat each = w / Int(block_sizes[k]);
        for (std::size_t i = 0; i < block_sizes[k]; ++i) coords.push_back(each);
    }
    return make_point(J, std::move(coords));
}

SimplexPoint psi_eval(const Flag& J, const std::vector<std::set<std::size_t>>& chain,
                      const std::vector<Rat>& weights) {
    if (chain.empty()) throw NotASubflagChain("empty chain of subflags");
    for (const auto& S : chain) {
        if (S.empty()) throw NotASubflagChain("empty subflag in the chain");
        if (*S.rbegin() >= J.entries.size())
            throw NotASubflagChain("subflag position outside the flag");
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!std::includes(chain[i + 1].begin(), chain[i + 1].end(), chain[i].begin(),
                           chain[i].end()) ||
            chain[i].size() >= chain[i + 1].size())
            throw NotASubflagChain("subflags must strictly increase along the chain");
    }
    if (weights.size() != chain.size()) throw Error("one weight per subflag");
    Rat sum = 0;
    for (const Rat& w : weights) {
        if (w < 0) throw Error("negative weight");
        sum += w;
    }
    if (sum != 1) throw Error("weights must sum to 1");

    std::vector<Rat> coords(J.entries.size(), kZero);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        std::vector<Label> sub_entries;
        std::vector<std::size_t> positions(chain[i].begin(), chain[i].end());
        for (std::size_t pos : positions) sub_entries.push_back(J.entries[pos]);
        SimplexPoint b = weighted_barycenter(make_flag(J.poset, std::move(sub_entries)));
        for (std::size_t j = 0; j < positions.size(); ++j)
            coords[positions[j]] += weights[i] * b.coords[j];
    }
    return make_point(J, std::move(coords));
}

SimplexPoint rho(const SimplexPoint& x, const Label& p) {
    Rat mass = s_coord(x, p, RestrictMode::le);
    if (mass == 0) throw DegenerateProjection("no mass at or below '" + p + "'");
    std::vector<Rat> coords(x.coords.size(), kZero);
    for (std::size_t i : mode_positions(x.flag, p, RestrictMode::le))
        coords[i] = x.coords[i] / mass;
    return make_point(x.flag, std::move(coords));
}

SimplexPoint rho_homotopy(const SimplexPoint& x, const Label& p, const Rat& t) {
    if (t < 0 || t > 1) throw Error("homotopy parameter outside [0,1]");
    Rat mass = s_coord(x, p, RestrictMode::le);
    if (mass == 0) throw DegenerateProjection("no mass at or below '" + p + "'");
    // the <=p block grows to (1-t)s + t, the rest shrinks by (1-t)
    Rat scale_le = ((kOne - t) * mass + t) / mass;
    std::vector<Rat> coords = x.coords;
    std::vector<bool> le(coords.size(), false);
    for (std::size_t i : mode_positions(x.flag, p, RestrictMode::le)) le[i] = true;
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] *= le[i] ? scale_le : (kOne - t);
    return make_point(x.flag, std::move(coords));
}

SimplexPoint aspire_eval(const SimplexPoint& x, const RegularFlag& I, const SimplexPoint& t) {
    if (t.flag.entries != I.entries)
        throw Error("the time point must live on the flag's simplex");
    PLFunction one = phi_one();
    for (const auto& p : I.entries)
        if (!in_phi_hood(x, p, one))
            throw OutsideNeighborhood("point outside the standard neighborhood of '" + p + "'");
    std::vector<Rat> coords(x.coords.size(), kZero);
    for (std::size_t k = 0; k < I.entries.size(); ++k) {
        if (t.coords[k] == 0) continue;
        SimplexPoint r = rho(x, I.entries[k]);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += t.coords[k] * r.coords[i];
    }
    return make_point(x.flag, std::move(coords));
}

Rat reparam_t(const Rat& t, const Rat& phi_value) {
    Rat hat = phi_value / (kOne + phi_value);
    if (t >= Rat(1, 2)) return 2 * t - 1 + (2 - 2 * t) * hat;
    return 2 * t * hat;
}

SimplexPoint phi_reparam(const SimplexPoint& x, const Label& p, const PLFunction& phi) {
    Rat bar = s_coord(x, p, RestrictMode::not_lt);
    std::vector<std::size_t> at_p = mode_positions(x.flag, p, RestrictMode::eq);
    if (bar == 0 || at_p.empty()) return x;  // identity cases
    Rat sp = s_coord(x, p, RestrictMode::eq);
    Rat sn = s_coord(x, p, RestrictMode::not_le);
    Rat t = sn / bar;
    Rat tt = reparam_t(t, pl_eval(phi, bar));
    std::vector<Rat> coords = x.coords;
    for (std::size_t i : at_p) coords[i] = sp == 0 ? kZero : x.coords[i] * (kOne - tt) * bar / sp;
    for (std::size_t i : mode_positions(x.flag, p, RestrictMode::not_le))
        coords[i] = sn == 0 ? kZero : x.coords[i] * tt * bar / sn;
    return make_point(x.flag, std::move(coords));
}

}  // namespace strathol
