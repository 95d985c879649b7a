#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strathol/errors.hpp"
#include "strathol/rational.hpp"

namespace strathol {

using Label = std::string;

// Finite poset of strata labels. The relation is stored reflexively and
// transitively closed; construction accepts either Hasse pairs or a full
// relation and always recomputes the closure.
class Poset {
public:
    Poset(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& relations);

    const std::vector<Label>& elements() const { return elements_; }
    bool contains(const Label& p) const { return up_.count(p) != 0; }
    void require(const Label& p) const;
    bool leq(const Label& p, const Label& q) const;
    bool lt(const Label& p, const Label& q) const { return p != q && leq(p, q); }
    const std::set<Label>& up_set(const Label& p) const;

    bool operator==(const Poset& o) const { return elements_ == o.elements_ && up_ == o.up_; }
    bool operator!=(const Poset& o) const { return !(*this == o); }

private:
    std::vector<Label> elements_;          // sorted by label text
    std::map<Label, std::set<Label>> up_;  // p -> every q with p <= q
};

using PosetPtr = std::shared_ptr<const Poset>;

PosetPtr build_poset(std::vector<Label> elements, std::vector<std::pair<Label, Label>> relations);
bool leq(const Poset& P, const Label& p, const Label& q);

// Number of nonempty chains, computed without enumerating them. Used by the
// CLI to warn before an enumeration that would exceed its comfort threshold.
Int count_regular_flags(const Poset& P);

}  // namespace strathol
