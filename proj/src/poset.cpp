#include "strathol/poset.hpp"

#include <algorithm>
#include <cctype>

namespace strathol {

namespace {

// Labels appear bare in the file format, so a few tokens are off limits.
void validate_label(const Label& p) {
    if (p.empty()) throw Error("empty label");
    for (char c : p)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',')
            throw Error("label '" + p + "' contains a reserved character");
    if (p == "poset" || p == "rel" || p == "vertex" || p == "simplex" || p == "cell")
        throw Error("label '" + p + "' collides with a file format keyword");
}

}  // namespace

Poset::Poset(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& relations) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i + 1 < elements.size(); ++i)
        if (elements[i] == elements[i + 1])
            throw Error("duplicate poset element '" + elements[i] + "'");
    for (const auto& e : elements) validate_label(e);
    elements_ = std::move(elements);

    std::map<Label, std::set<Label>> adj;
    for (const auto& e : elements_) {
        adj[e];
        up_[e].insert(e);
    }
    for (const auto& [p, q] : relations) {
        if (!up_.count(p)) throw UnknownElement("relation mentions unknown element '" + p + "'");
        if (!up_.count(q)) throw UnknownElement("relation mentions unknown element '" + q + "'");
        adj[p].insert(q);
    }

    for (const auto& e : elements_) {
        std::vector<Label> stack(adj[e].begin(), adj[e].end());
        auto& up = up_[e];
        while (!stack.empty()) {
            Label cur = stack.back();
            stack.pop_back();
            if (up.insert(cur).second)
                for (const auto& nxt : adj[cur])
                    if (!up.count(nxt)) stack.push_back(nxt);
        }
    }

    for (const auto& p : elements_)
        for (const auto& q : up_.at(p))
            if (p != q && up_.at(q).count(p))
                throw CycleError("antisymmetry violated between '" + p + "' and '" + q + "'");
}

void Poset::require(const Label& p) const {
    if (!contains(p)) throw UnknownElement("unknown poset element '" + p + "'");
}

bool Poset::leq(const Label& p, const Label& q) const {
    require(p);
    require(q);
    return up_.at(p).count(q) != 0;
}

const std::set<Label>& Poset::up_set(const Label& p) const {
    require(p);
    return up_.at(p);
}

PosetPtr build_poset(std::vector<Label> elements, std::vector<std::pair<Label, Label>> relations) {
    return std::make_shared<const Poset>(std::move(elements), relations);
}

bool leq(const Poset& P, const Label& p, const Label& q) { return P.leq(p, q); }

Int count_regular_flags(const Poset& P) {
    // chains ending at e, computed along a linear extension (down-set size order)
    std::vector<Label> order = P.elements();
    std::stable_sort(order.begin(), order.end(), [&](const Label& a, const Label& b) {
        std::size_t da = 0, db = 0;
        for (const auto& e : P.elements()) {
            if (P.leq(e, a)) ++da;
            if (P.leq(e, b)) ++db;
        }
        return da < db;
    });
    std::map<Label, Int> ending;
    Int total = 0;
    for (const auto& e : order) {
        Int c = 1;
        for (const auto& f : order) {
            if (f == e) continue;
            if (P.lt(f, e)) c += ending[f];
        }
        ending[e] = c;
        total += c;
    }
    return total;
}

}  // namespace strathol
