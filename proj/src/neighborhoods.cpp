#include "strathol/neighborhoods.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace strathol {

namespace {

std::set<Label> labelset(const StratComplex& K, const Simplex& s) {
    std::set<Label> out;
    for (const auto& v : s) out.insert(K.labels.at(v));
    return out;
}

bool hood_condition(const Poset& P, const std::set<Label>& ls, const Label& p) {
    if (ls.count(p)) return true;
    for (const auto& q : ls)
        if (!P.lt(q, p)) return false;
    return true;
}

// full subcomplex of sd(K) on the barycenters whose carrier label set passes
template <class Pred>
Subcomplex hood_select(const StratComplex& K, Pred pass) {
    SdResult sd = barycentric_subdivision_with_carriers(K);
    std::set<Vertex> verts;
    for (const auto& [b, sigma] : sd.carrier)
        if (pass(labelset(K, sigma))) verts.insert(b);
    return full_subcomplex(sd.complex, verts);
}

}  // namespace

Subcomplex sim_stan_hood(const StratComplex& K, const Label& p) {
    K.poset->require(p);
    return hood_select(K, [&](const std::set<Label>& ls) {
        return hood_condition(*K.poset, ls, p);
    });
}

Subcomplex stan_hood_flag(const StratComplex& K, const RegularFlag& I) {
    for (const auto& p : I.entries) K.poset->require(p);
    return hood_select(K, [&](const std::set<Label>& ls) {
        for (const auto& p : I.entries)
            if (!hood_condition(*K.poset, ls, p)) return false;
        return true;
    });
}

Subcomplex simplicial_link(const StratComplex& K, const RegularFlag& I) {
    for (const auto& p : I.entries) K.poset->require(p);
    const std::set<Label> want(I.entries.begin(), I.entries.end());
    return hood_select(K, [&](const std::set<Label>& ls) { return ls == want; });
}

StratComplex stratum_ge_model(const StratComplex& K, const Label& p) {
    K.poset->require(p);
    return hood_select(K, [&](const std::set<Label>& ls) {
               for (const auto& q : ls)
                   if (K.poset->leq(p, q)) return true;
               return false;
           })
        .carrier();
}

HolinkModel holink_model(const StratComplex& K, const RegularFlag& I) {
    StratComplex U = stan_hood_flag(K, I).carrier();
    StratComplex model = stratum_ge_model(U, I.max());
    std::string path = "U(" + flag_text(I) + ") carrier, stratum model at >= " + I.max();
    return HolinkModel{I, std::move(model), std::move(path)};
}

ComplementDiagram regular_complement_diagram(const StratComplex& K) {
    ComplementDiagram diagram;
    std::vector<RegularFlag> flags = regular_flags(K.poset);
    for (const auto& I : flags) diagram.models.emplace(I.entries, holink_model(K, I));
    auto is_proper_subflag = [](const std::vector<Label>& small, const std::vector<Label>& big) {
        if (small.size() >= big.size()) return false;
        std::size_t j = 0;
        for (const auto& p : big)
            if (j < small.size() && small[j] == p) ++j;
        return j == small.size();
    };
    for (const auto& I : flags)
        for (const auto& J : flags) {
            if (!is_proper_subflag(J.entries, I.entries)) continue;
            const StratComplex& inner = diagram.models.at(I.entries).complex;
            const StratComplex& outer = diagram.models.at(J.entries).complex;
            for (const auto& s : inner.simplices)
                if (!outer.contains(s))
                    throw Error("complement diagram inclusion failed between " + flag_text(I) +
                                " and " + flag_text(J));
            diagram.inclusions.emplace_back(I.entries, J.entries);
        }
    return diagram;
}

}  // namespace strathol
