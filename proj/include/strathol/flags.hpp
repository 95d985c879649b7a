#pragma once

#include <string>
#include <vector>

#include "strathol/poset.hpp"

namespace strathol {

// The restriction predicates used throughout the coordinate calculus. For
// elements incomparable to p, not_le and not_lt keep them: the predicate is
// the literal negation of <= (respectively <).
enum class RestrictMode { eq, le, lt, ge, not_le, not_lt };

// Weakly increasing, pairwise comparable label sequence. May be empty (derived
// subflags routinely are) and may repeat labels.
struct Flag {
    PosetPtr poset;
    std::vector<Label> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    bool operator==(const Flag& o) const;
    bool operator!=(const Flag& o) const { return !(*this == o); }
};

// Strictly increasing label sequence, never empty.
struct RegularFlag {
    PosetPtr poset;
    std::vector<Label> entries;

    std::size_t size() const { return entries.size(); }
    const Label& max() const { return entries.back(); }
    bool operator==(const RegularFlag& o) const;
    bool operator!=(const RegularFlag& o) const { return !(*this == o); }
};

Flag make_flag(PosetPtr poset, std::vector<Label> entries);
RegularFlag make_regular_flag(PosetPtr poset, std::vector<Label> entries);
Flag as_flag(const RegularFlag& I);

bool mode_matches(const Poset& P, const Label& entry, const Label& p, RestrictMode mode);
Flag restrict(const Flag& J, const Label& p, RestrictMode mode);
RegularFlag underlying_regular(const Flag& J);
bool degenerates_from(const Flag& J, const RegularFlag& I);

// All nonempty chains, ordered by length and then lexicographically on labels.
std::vector<RegularFlag> regular_flags(const PosetPtr& P);

std::string flag_text(const Flag& J);
std::string flag_text(const RegularFlag& I);

}  // namespace strathol
