#include "strathol/flags.hpp"

#include <algorithm>

namespace strathol {

namespace {

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

}  // namespace

bool Flag::operator==(const Flag& o) const {
    return entries == o.entries && same_poset(poset, o.poset);
}

bool RegularFlag::operator==(const RegularFlag& o) const {
    return entries == o.entries && same_poset(poset, o.poset);
}

Flag make_flag(PosetPtr poset, std::vector<Label> entries) {
    if (!poset) throw Error("flag needs a poset");
    for (const auto& e : entries) poset->require(e);
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (!poset->leq(entries[i], entries[i + 1]))
            throw ChainViolation("flag entries '" + entries[i] + "' and '" + entries[i + 1] +
                                 "' are not weakly increasing");
    return Flag{std::move(poset), std::move(entries)};
}

RegularFlag make_regular_flag(PosetPtr poset, std::vector<Label> entries) {
    if (!poset) throw Error("flag needs a poset");
    if (entries.empty()) throw FlagNotRegular("a regular flag must be nonempty");
    for (const auto& e : entries) poset->require(e);
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (!poset->lt(entries[i], entries[i + 1]))
            throw FlagNotRegular("entries '" + entries[i] + "' and '" + entries[i + 1] +
                                 "' are not strictly increasing");
    return RegularFlag{std::move(poset), std::move(entries)};
}

Flag as_flag(const RegularFlag& I) { return Flag{I.poset, I.entries}; }

bool mode_matches(const Poset& P, const Label& entry, const Label& p, RestrictMode mode) {
    switch (mode) {
        case RestrictMode::eq: return entry == p;
        case RestrictMode::le: return P.leq(entry, p);
        case RestrictMode::lt: return P.lt(entry, p);
        case RestrictMode::ge: return P.leq(p, entry);
        case RestrictMode::not_le: return !P.leq(entry, p);
        case RestrictMode::not_lt: return !P.lt(entry, p);
    }
    throw Error("bad restrict mode");
}

Flag restrict(const Flag& J, const Label& p, RestrictMode mode) {
    if (!J.poset) throw Error("flag needs a poset");
    J.poset->require(p);
    std::vector<Label> kept;
    for (const auto& e : J.entries)
        if (mode_matches(*J.poset, e, p, mode)) kept.push_back(e);
    return Flag{J.poset, std::move(kept)};
}

RegularFlag underlying_regular(const Flag& J) {
    if (J.empty()) throw EmptyFlag("empty flag has no underlying regular flag");
    std::vector<Label> distinct = J.entries;
    // equal entries of a chain are adjacent, so unique() removes all repeats
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return RegularFlag{J.poset, std::move(distinct)};
}

bool degenerates_from(const Flag& J, const RegularFlag& I) {
    if (!same_poset(J.poset, I.poset)) throw Error("flags live over different posets");
    return underlying_regular(J).entries == I.entries;
}

std::vector<RegularFlag> regular_flags(const PosetPtr& P) {
    std::vector<std::vector<Label>> chains;
    std::vector<Label> cur;
    // every chain, listed once in its unique increasing order
    auto extend = [&](auto&& self, const Label& last) -> void {
        for (const auto& q : P->elements()) {
            if (!P->lt(last, q)) continue;
            cur.push_back(q);
            chains.push_back(cur);
            self(self, q);
            cur.pop_back();
        }
    };
    for (const auto& e : P->elements()) {
        cur = {e};
        chains.push_back(cur);
        extend(extend, e);
    }
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<RegularFlag> out;
    out.reserve(chains.size());
    for (auto& c : chains) out.push_back(RegularFlag{P, std::move(c)});
    return out;
}

std::string flag_text(const Flag& J) {
    std::string s;
    for (std::size_t i = 0; i < J.entries.size(); ++i) {
        if (i) s += ",";
        s += J.entries[i];
    }
    return s;
}

std::string flag_text(const RegularFlag& I) { return flag_text(Flag{I.poset, I.entries}); }

}  // namespace strathol
