#include "strathol/corpus.hpp"

#include <algorithm>
#include <functional>

#include "strathol/flags.hpp"

namespace strathol {

namespace {

PosetPtr chain_poset(const std::vector<Label>& labels) {
    std::vector<std::pair<Label, Label>> rels;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) rels.emplace_back(labels[i], labels[i + 1]);
    return build_poset(labels, rels);
}

PosetPtr ab_poset() { return chain_poset({"a", "b"}); }

// vertices v0..vn with labels J over the chain of J's distinct labels
StratComplex stratified_simplex(const std::vector<Label>& J) {
    if (J.empty()) throw UnknownCorpusName("a stratified simplex needs at least one label");
    std::vector<Label> distinct;
    for (const auto& p : J)
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
            distinct.push_back(p);
    PosetPtr P = chain_poset(distinct);
    make_flag(P, J);  // rejects non-monotone label lists
    std::vector<std::pair<Vertex, Label>> verts;
    Simplex top;
    for (std::size_t i = 0; i < J.size(); ++i) {
        Vertex v = "v" + std::to_string(i);
        verts.emplace_back(v, J[i]);
        top.push_back(v);
    }
    return from_maximal(P, verts, {top});
}

StratComplex boundary_simplex(const std::vector<Label>& J) {
    StratComplex full = stratified_simplex(J);
    if (J.size() == 1) return make_complex(full.poset, {}, {});
    Simplex top;
    for (std::size_t i = 0; i < J.size(); ++i) top.push_back("v" + std::to_string(i));
    std::vector<Simplex> facets;
    for (std::size_t i = 0; i < top.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < top.size(); ++j)
            if (j != i) f.push_back(top[j]);
        facets.push_back(std::move(f));
    }
    std::vector<std::pair<Vertex, Label>> verts;
    for (std::size_t i = 0; i < J.size(); ++i) verts.emplace_back(top[i], J[i]);
    return from_maximal(full.poset, verts, facets);
}

StratComplex cone_on_circle() {
    return from_maximal(ab_poset(),
                        {{"c", "a"}, {"r0", "b"}, {"r1", "b"}, {"r2", "b"}},
                        {{"c", "r0", "r1"}, {"c", "r1", "r2"}, {"c", "r0", "r2"}});
}

StratComplex suspension_circle() {
    return from_maximal(ab_poset(),
                        {{"n", "a"}, {"s", "a"}, {"r0", "b"}, {"r1", "b"}, {"r2", "b"}},
                        {{"n", "r0", "r1"}, {"n", "r1", "r2"}, {"n", "r0", "r2"},
                         {"s", "r0", "r1"}, {"s", "r1", "r2"}, {"s", "r0", "r2"}});
}

StratComplex suspension_two_points() {
    return from_maximal(ab_poset(),
                        {{"n", "a"}, {"s", "a"}, {"x", "b"}, {"y", "b"}},
                        {{"n", "x"}, {"n", "y"}, {"s", "x"}, {"s", "y"}});
}

StratComplex cylinder() {
    std::vector<std::pair<Vertex, Label>> verts;
    for (int i = 0; i < 3; ++i) {
        verts.emplace_back("u" + std::to_string(i), "b");
        verts.emplace_back("w" + std::to_string(i), "b");
    }
    std::vector<Simplex> tris;
    for (int i = 0; i < 3; ++i) {
        std::string ui = "u" + std::to_string(i), uj = "u" + std::to_string((i + 1) % 3);
        std::string wi = "w" + std::to_string(i), wj = "w" + std::to_string((i + 1) % 3);
        tris.push_back({ui, uj, wi});
        tris.push_back({uj, wi, wj});
    }
    return from_maximal(ab_poset(), verts, tris);
}

std::vector<Label> parse_labels(const std::string& text) {
    std::vector<Label> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (const auto& p : out)
        if (p.empty()) throw UnknownCorpusName("empty label in '" + text + "'");
    return out;
}

}  // namespace

DeltaComplex pinched_torus() {
    // A square with both vertical sides glued to one edge pair: one
    // 0-stratum point x, a 1-stratum circle through m, a 2-stratum torus
    // bulk pinched at x. Homotopy type of S^1 v S^2.
    PosetPtr P = chain_poset({"0", "1", "2"});
    std::vector<std::vector<DeltaCell>> cells(3);
    cells[0] = {{"x", {}, {"0"}}, {"m", {}, {"1"}}, {"y", {}, {"2"}}};
    cells[1] = {{"a", {"y", "x"}, {"0", "2"}},  {"b", {"y", "x"}, {"0", "2"}},
                {"g1", {"m", "x"}, {"0", "1"}}, {"g2", {"m", "x"}, {"0", "1"}},
                {"v1", {"y", "m"}, {"1", "2"}}, {"v2", {"y", "m"}, {"1", "2"}}};
    cells[2] = {{"t1", {"v1", "a", "g1"}, {"0", "1", "2"}},
                {"t2", {"v1", "b", "g2"}, {"0", "1", "2"}},
                {"t3", {"v2", "b", "g2"}, {"0", "1", "2"}},
                {"t4", {"v2", "a", "g1"}, {"0", "1", "2"}}};
    return make_delta_complex(std::move(P), std::move(cells));
}

CorpusItem corpus(const std::string& name) {
    if (name == "pinched_torus") return pinched_torus();
    if (name == "cone_on_circle") return cone_on_circle();
    if (name == "suspension_circle") return suspension_circle();
    if (name == "suspension_two_points") return suspension_two_points();
    if (name == "cylinder") return cylinder();
    for (const std::string prefix : {"stratified_simplex", "boundary"}) {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            continue;
        char sep = name[prefix.size()];
        if (sep != ':' && sep != '(') continue;
        std::string args = name.substr(prefix.size() + 1);
        if (sep == '(' && !args.empty() && args.back() == ')') args.pop_back();
        std::vector<Label> J = parse_labels(args);
        return prefix == "boundary" ? boundary_simplex(J) : stratified_simplex(J);
    }
    std::string known;
    for (const auto& n : corpus_names()) known += (known.empty() ? "" : ", ") + n;
    throw UnknownCorpusName("unknown corpus name '" + name + "' (known: " + known + ")");
}

StratComplex corpus_flat(const std::string& name) {
    CorpusItem item = corpus(name);
    if (auto* K = std::get_if<StratComplex>(&item)) return std::move(*K);
    return to_strat_complex(delta_sd(std::get<DeltaComplex>(item)));
}

std::vector<std::string> corpus_names() {
    return {"pinched_torus",      "cone_on_circle", "suspension_circle",
            "suspension_two_points", "cylinder",
            "stratified_simplex:<labels>", "boundary:<labels>"};
}

std::vector<std::pair<std::string, StratComplex>> corpus_battery() {
    std::vector<std::pair<std::string, StratComplex>> battery;
    // every flag of the chain 0<1<2 with 1 to 4 entries
    std::vector<std::vector<Label>> flags;
    std::vector<Label> chain = {"0", "1", "2"};
    std::function<void(std::vector<Label>&, std::size_t)> grow =
        [&](std::vector<Label>& J, std::size_t from) {
            if (!J.empty()) flags.push_back(J);
            if (J.size() == 4) return;
            for (std::size_t i = from; i < chain.size(); ++i) {
                J.push_back(chain[i]);
                grow(J, i);
                J.pop_back();
            }
        };
    std::vector<Label> J;
    grow(J, 0);
    for (const auto& f : flags) {
        std::string args;
        for (const auto& p : f) args += (args.empty() ? "" : ",") + p;
        battery.emplace_back("stratified_simplex:" + args, corpus_flat("stratified_simplex:" + args));
        battery.emplace_back("boundary:" + args, corpus_flat("boundary:" + args));
    }
    for (const char* n : {"cone_on_circle", "suspension_circle", "suspension_two_points"})
        battery.emplace_back(n, corpus_flat(n));
    battery.emplace_back("pinched_torus", corpus_flat("pinched_torus"));
    return battery;
}

}  // namespace strathol
