#include "strathol/complex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace strathol {

namespace {

void validate_vertex_id(const Vertex& v) {
    if (v.empty()) throw Error("empty vertex identifier");
    for (char c : v)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '|')
            throw Error("vertex identifier '" + v + "' contains a reserved character");
}

Simplex sorted_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

int StratComplex::dim() const {
    int d = -1;
    for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::vector<std::size_t> StratComplex::counts() const {
    std::vector<std::size_t> c(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& s : simplices) ++c[s.size() - 1];
    return c;
}

long long StratComplex::euler() const {
    long long chi = 0;
    for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

bool StratComplex::operator==(const StratComplex& o) const {
    if (labels != o.labels || simplices != o.simplices) return false;
    if (poset == o.poset) return true;
    return poset && o.poset && *poset == *o.poset;
}

StratComplex Subcomplex::carrier() const {
    std::map<Vertex, Label> labels;
    for (const auto& s : simplices)
        if (s.size() == 1) labels[s[0]] = parent.labels.at(s[0]);
    return make_complex(parent.poset, std::move(labels), simplices);
}

std::string barycenter_name(const Simplex& s) {
    std::string name;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) name += "|";
        name += s[i];
    }
    return name;
}

StratComplex make_complex(PosetPtr poset, std::map<Vertex, Label> labels,
                          std::set<Simplex> simplices) {
    if (!poset) throw Error("complex needs a poset");
    for (const auto& [v, p] : labels) {
        if (v.empty()) throw Error("empty vertex identifier");
        if (!poset->contains(p)) throw UnknownElement("vertex '" + v + "' has unknown label '" + p + "'");
    }
    for (const auto& [v, p] : labels) {
        (void)p;
        simplices.insert(Simplex{v});
    }
    for (const auto& s : simplices) {
        if (s.empty()) throw Error("empty simplex");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error("simplex vertex list must be sorted and duplicate-free");
        for (const auto& v : s)
            if (!labels.count(v)) throw UnknownVertex("simplex uses unknown vertex '" + v + "'");
        // labels must be pairwise comparable
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const Label& a = labels.at(s[i]);
                const Label& b = labels.at(s[j]);
                if (!poset->leq(a, b) && !poset->leq(b, a))
                    throw ChainViolation("simplex {" + barycenter_name(s) +
                                         "} carries incomparable labels '" + a + "', '" + b + "'");
            }
        // face closure: checking facets suffices by induction
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                facet.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) facet.push_back(s[j]);
                if (!simplices.count(facet))
                    throw Error("simplex set is not face-closed at {" + barycenter_name(s) + "}");
            }
    }
    return StratComplex{std::move(poset), std::move(labels), std::move(simplices)};
}

StratComplex from_maximal(PosetPtr poset,
                          const std::vector<std::pair<Vertex, Label>>& labeled_vertices,
                          const std::vector<Simplex>& maximal_simplices) {
    std::map<Vertex, Label> labels;
    for (const auto& [v, p] : labeled_vertices) {
        validate_vertex_id(v);
        if (!labels.emplace(v, p).second) throw Error("duplicate vertex '" + v + "'");
    }
    std::set<Simplex> simplices;
    for (const auto& input : maximal_simplices) {
        Simplex s = sorted_simplex(input);
        for (const auto& v : s)
            if (!labels.count(v)) throw UnknownVertex("unknown vertex '" + v + "'");
        // all nonempty subsets
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) sub.push_back(s[i]);
            simplices.insert(std::move(sub));
        }
    }
    return make_complex(std::move(poset), std::move(labels), std::move(simplices));
}

Flag flag_of(const StratComplex& K, const Simplex& s) {
    if (!K.contains(s)) throw UnknownSimplex("simplex {" + barycenter_name(s) + "} not in complex");
    std::vector<std::pair<Label, Vertex>> pairs;
    pairs.reserve(s.size());
    for (const auto& v : s) pairs.emplace_back(K.labels.at(v), v);
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return K.poset->lt(a.first, b.first);
    });
    std::vector<Label> entries;
    entries.reserve(pairs.size());
    for (auto& pr : pairs) entries.push_back(std::move(pr.first));
    return make_flag(K.poset, std::move(entries));
}

Label max_label(const StratComplex& K, const Simplex& s) {
    return flag_of(K, s).entries.back();
}

StratComplex restrict_le(const StratComplex& K, const Label& p) {
    K.poset->require(p);
    std::map<Vertex, Label> labels;
    for (const auto& [v, q] : K.labels)
        if (K.poset->leq(q, p)) labels.emplace(v, q);
    std::set<Simplex> kept;
    for (const auto& s : K.simplices) {
        bool all = true;
        for (const auto& v : s)
            if (!labels.count(v)) { all = false; break; }
        if (all) kept.insert(s);
    }
    return make_complex(K.poset, std::move(labels), std::move(kept));
}

SdResult barycentric_subdivision_with_carriers(const StratComplex& K) {
    std::map<Vertex, Simplex> carrier;
    std::map<Vertex, Label> labels;
    for (const auto& s : K.simplices) {
        Vertex b = barycenter_name(s);
        if (!carrier.emplace(b, s).second)
            throw Error("barycenter name collision at '" + b + "'");
        labels[b] = max_label(K, s);  // last-vertex stratification
    }
    std::set<Simplex> chains;
    std::vector<Vertex> names;
    // descending chains of simplices; each chain is found exactly once
    std::function<void(const Simplex&)> extend = [&](const Simplex& s) {
        names.push_back(barycenter_name(s));
        Simplex chain = names;
        std::sort(chain.begin(), chain.end());
        chains.insert(std::move(chain));
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) sub.push_back(s[i]);
            extend(sub);
        }
        names.pop_back();
    };
    for (const auto& s : K.simplices) {
        names.clear();
        extend(s);
    }
    return SdResult{make_complex(K.poset, std::move(labels), std::move(chains)),
                    std::move(carrier)};
}

StratComplex barycentric_subdivision(const StratComplex& K) {
    return barycentric_subdivision_with_carriers(K).complex;
}

Subcomplex full_subcomplex(const StratComplex& K, const std::set<Vertex>& verts) {
    std::set<Simplex> kept;
    for (const auto& s : K.simplices) {
        bool all = true;
        for (const auto& v : s)
            if (!verts.count(v)) { all = false; break; }
        if (all) kept.insert(s);
    }
    return Subcomplex{K, std::move(kept)};
}

GlueResult glue(const StratComplex& X, const StratComplex& B, const Subcomplex& A,
                const std::map<Vertex, Vertex>& embed) {
    if (*X.poset != *B.poset) throw LabelMismatch("the two complexes use different posets");
    if (A.parent != B) throw NotEmbedding("the glued subcomplex does not live in the second complex");
    for (const auto& s : A.simplices)
        if (!B.contains(s)) throw NotEmbedding("subcomplex simplex missing from its parent");

    std::set<Vertex> a_vertices;
    for (const auto& s : A.simplices)
        if (s.size() == 1) a_vertices.insert(s[0]);

    for (const auto& [a, x] : embed) {
        (void)x;
        if (!a_vertices.count(a)) throw NotEmbedding("map mentions vertex '" + a + "' outside the subcomplex");
    }
    std::set<Vertex> image;
    for (const auto& a : a_vertices) {
        auto it = embed.find(a);
        if (it == embed.end()) throw NotEmbedding("no image for vertex '" + a + "'");
        const Vertex& x = it->second;
        if (!X.labels.count(x)) throw NotEmbedding("image vertex '" + x + "' not in the target complex");
        if (!image.insert(x).second) throw NotEmbedding("vertex map is not injective at '" + x + "'");
        if (X.labels.at(x) != B.labels.at(a))
            throw LabelMismatch("vertex '" + a + "' maps across labels");
    }
    auto map_simplex = [&](const Simplex& s, const std::map<Vertex, Vertex>& m) {
        Simplex out;
        out.reserve(s.size());
        for (const auto& v : s) out.push_back(m.at(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const auto& s : A.simplices)
        if (!X.contains(map_simplex(s, embed)))
            throw NotEmbedding("image of simplex {" + barycenter_name(s) + "} is not a simplex");

    // fresh identifiers for B vertices outside A
    std::set<Vertex> taken;
    for (const auto& [v, p] : X.labels) {
        (void)p;
        taken.insert(v);
    }
    std::map<Vertex, Vertex> m = embed;
    for (const auto& [b, p] : B.labels) {
        (void)p;
        if (a_vertices.count(b)) continue;
        Vertex candidate = b;
        for (int k = 1; taken.count(candidate); ++k) candidate = b + "~" + std::to_string(k);
        taken.insert(candidate);
        m.emplace(b, candidate);
    }

    std::map<Vertex, Label> labels = X.labels;
    for (const auto& [b, p] : B.labels) labels.emplace(m.at(b), p);

    std::set<Simplex> simplices = X.simplices;
    std::set<Simplex> b_image, a_image;
    for (const auto& s : B.simplices) {
        Simplex t = map_simplex(s, m);
        if (!A.simplices.count(s) && X.contains(t))
            throw CollapseError("simplex {" + barycenter_name(t) +
                                "} outside the glued subcomplex would collapse onto an existing simplex");
        simplices.insert(t);
        b_image.insert(std::move(t));
    }
    for (const auto& s : A.simplices) a_image.insert(map_simplex(s, embed));

    StratComplex Y = make_complex(X.poset, std::move(labels), std::move(simplices));
    GlueResult out;
    out.x_part = Subcomplex{Y, X.simplices};
    out.b_part = Subcomplex{Y, std::move(b_image)};
    out.a_part = Subcomplex{Y, std::move(a_image)};
    out.b_vertex_map = std::move(m);
    out.complex = std::move(Y);
    return out;
}

}  // namespace strathol
