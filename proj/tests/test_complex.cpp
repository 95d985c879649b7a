#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "strathol/complex.hpp"
#include "strathol/corpus.hpp"
#include "strathol/poset.hpp"

using namespace strathol;

namespace {

PosetPtr chain(int n) {
    std::vector<Label> el;
    std::vector<std::pair<Label, Label>> rels;
    for (int i = 0; i < n; ++i) {
        el.push_back(std::to_string(i));
        if (i) rels.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return build_poset(el, rels);
}

// the stratified n-simplex over the (n+1)-chain, vertex i labeled i
StratComplex strat_simplex(int n) {
    auto P = chain(n + 1);
    std::vector<std::pair<Vertex, Label>> verts;
    Simplex top;
    for (int i = 0; i <= n; ++i) {
        verts.emplace_back("v" + std::to_string(i), std::to_string(i));
        top.push_back("v" + std::to_string(i));
    }
    return from_maximal(P, verts, {top});
}

}  // namespace

TEST_CASE("from_maximal closes downward") {
    auto P = chain(2);
    auto K = from_maximal(P, {{"a", "0"}, {"b", "1"}, {"c", "1"}}, {{"a", "b", "c"}});
    REQUIRE(K.simplices.size() == 7);
    REQUIRE(K.contains({"a"}));
    REQUIRE(K.contains({"a", "c"}));
    REQUIRE(K.dim() == 2);
    REQUIRE(K.counts() == std::vector<std::size_t>{3, 3, 1});
    REQUIRE(K.euler() == 1);
}

TEST_CASE("simplices must carry chains of labels") {
    auto anti = build_poset({"a", "b"}, {});
    REQUIRE_THROWS_AS(from_maximal(anti, {{"x", "a"}, {"y", "b"}}, {{"x", "y"}}),
                      ChainViolation);
}

TEST_CASE("construction validates vertices and ids") {
    auto P = chain(2);
    REQUIRE_THROWS_AS(from_maximal(P, {{"x", "0"}}, {{"x", "y"}}), UnknownVertex);
    REQUIRE_THROWS_AS(from_maximal(P, {{"x", "missing"}}, {{"x"}}), UnknownElement);
    REQUIRE_THROWS_AS(from_maximal(P, {{"x|y", "0"}}, {{"x|y"}}), Error);
    // a lone vertex is a perfectly good complex
    auto K = from_maximal(P, {{"x", "0"}}, {{"x"}});
    REQUIRE(K.counts() == std::vector<std::size_t>{1});
    // make_complex supplies vertex singletons itself but demands the rest of
    // the closure explicitly
    REQUIRE_NOTHROW(make_complex(P, {{"x", "0"}, {"y", "0"}}, {{"x", "y"}}));
    REQUIRE_THROWS_AS(make_complex(P, {{"x", "0"}, {"y", "0"}, {"z", "0"}}, {{"x", "y", "z"}}),
                      Error);
}

TEST_CASE("flags of simplices") {
    auto P = chain(3);
    auto K = from_maximal(P, {{"a", "0"}, {"b", "1"}, {"c", "1"}, {"d", "2"}},
                          {{"a", "b", "c", "d"}});
    REQUIRE(flag_of(K, {"a", "b", "c"}).entries == std::vector<Label>{"0", "1", "1"});
    REQUIRE(flag_of(K, {"d"}).entries == std::vector<Label>{"2"});
    REQUIRE(flag_of(K, {"b", "c"}).entries == std::vector<Label>{"1", "1"});
    REQUIRE(max_label(K, {"a", "d"}) == "2");
    REQUIRE(max_label(K, {"b", "c"}) == "1");
    REQUIRE_THROWS_AS(flag_of(K, {"a", "z"}), UnknownSimplex);
    REQUIRE_THROWS_AS(max_label(K, {"zz"}), UnknownSimplex);
}

TEST_CASE("restriction to a lower set") {
    auto K = strat_simplex(2);
    auto K0 = restrict_le(K, "0");
    REQUIRE(K0.counts() == std::vector<std::size_t>{1});
    auto K1 = restrict_le(K, "1");
    REQUIRE(K1.counts() == std::vector<std::size_t>{2, 1});
    auto K2 = restrict_le(K, "2");
    REQUIRE(K2 == K);
    REQUIRE_THROWS_AS(restrict_le(K, "7"), UnknownElement);
}

TEST_CASE("subdivision of small complexes") {
    // an edge with labels 0 <= 1 subdivides into two edges
    auto P = chain(2);
    auto E = from_maximal(P, {{"x", "0"}, {"y", "1"}}, {{"x", "y"}});
    auto sd = barycentric_subdivision_with_carriers(E);
    REQUIRE(sd.complex.counts() == std::vector<std::size_t>{3, 2});
    REQUIRE(sd.complex.labels.at("x|y") == "1");
    REQUIRE(sd.complex.labels.at("x") == "0");
    REQUIRE(sd.complex.labels.at("y") == "1");
    REQUIRE(sd.carrier.at("x|y") == Simplex{"x", "y"});
    REQUIRE(sd.carrier.at("x") == Simplex{"x"});

    // a vertex is fixed by subdivision
    auto V = from_maximal(P, {{"v", "0"}}, {{"v"}});
    REQUIRE(barycentric_subdivision(V) == V);

    // the stratified 2-simplex: 7 vertices, 12 edges, 6 triangles
    auto sd2 = barycentric_subdivision(strat_simplex(2));
    REQUIRE(sd2.counts() == std::vector<std::size_t>{7, 12, 6});

    // and the 3-simplex: 15, 50, 60, 24
    auto sd3 = barycentric_subdivision(strat_simplex(3));
    REQUIRE(sd3.counts() == std::vector<std::size_t>{15, 50, 60, 24});
}

TEST_CASE("subdivision preserves the Euler characteristic") {
    for (const auto& name : corpus_names()) {
        auto K = corpus_flat(name);
        auto sd = barycentric_subdivision(K);
        REQUIRE(sd.euler() == K.euler());
    }
}

TEST_CASE("subdivision stratifies by the last vertex of each chain") {
    auto K = corpus_flat("pinched_torus");
    auto sd = barycentric_subdivision_with_carriers(K);
    for (const auto& [name, car] : sd.carrier) {
        REQUIRE(sd.complex.labels.at(name) == max_label(K, car));
    }
    // labels along a subdivision simplex weakly increase with chain refinement:
    // each simplex of sd(K) is a chain of faces, and its flag is the flag of
    // the label sequence, so it must pass flag_of without throwing
    for (const auto& s : sd.complex.simplices) {
        auto J = flag_of(sd.complex, s);
        REQUIRE(J.size() == s.size());
    }
}

TEST_CASE("subdivision commutes with lower restriction") {
    for (const auto& name : {"pinched_torus", "cone_on_circle", "suspension_circle"}) {
        auto K = corpus_flat(name);
        for (const auto& p : K.poset->elements()) {
            auto a = barycentric_subdivision(restrict_le(K, p));
            auto b = restrict_le(barycentric_subdivision(K), p);
            REQUIRE(a == b);
        }
    }
}

TEST_CASE("barycenter names collide with reserved identifiers") {
    auto P = chain(2);
    // make_complex does not inspect identifier characters, so this complex can
    // exist (the parser produces such names when reading subdivision output),
    // but subdividing it must refuse: "x|y" is the name its edge would get.
    StratComplex K = make_complex(
        P, {{"x", "0"}, {"y", "1"}, {"x|y", "1"}},
        {{"x"}, {"y"}, {"x|y"}, {"x", "y"}});
    REQUIRE_THROWS_AS(barycentric_subdivision(K), Error);
}

TEST_CASE("gluing two edges along a vertex gives a path") {
    auto P = chain(1);
    auto X = from_maximal(P, {{"a", "0"}, {"b", "0"}}, {{"a", "b"}});
    auto B = from_maximal(P, {{"c", "0"}, {"d", "0"}}, {{"c", "d"}});
    auto A = full_subcomplex(B, {"c"});
    auto G = glue(X, B, A, {{"c", "b"}});
    REQUIRE(G.complex.counts() == std::vector<std::size_t>{3, 2});
    REQUIRE(G.complex.contains({"a", "b"}));
    REQUIRE(G.complex.contains({"b", "d"}));
    REQUIRE(G.b_vertex_map.at("c") == "b");
    REQUIRE(G.b_vertex_map.at("d") == "d");
    REQUIRE(G.x_part.carrier() == X);
    REQUIRE(G.a_part.simplices.size() == 1);
}

TEST_CASE("gluing renames colliding free vertices") {
    auto P = chain(1);
    auto X = from_maximal(P, {{"a", "0"}, {"b", "0"}}, {{"a", "b"}});
    auto B = from_maximal(P, {{"b", "0"}, {"c", "0"}}, {{"b", "c"}});
    auto A = full_subcomplex(B, {"c"});
    auto G = glue(X, B, A, {{"c", "a"}});
    // B's free vertex "b" collides with X's "b" and is renamed
    REQUIRE(G.complex.counts() == std::vector<std::size_t>{3, 2});
    REQUIRE(G.b_vertex_map.at("b") != "b");
    REQUIRE(G.complex.labels.count(G.b_vertex_map.at("b")) == 1);
}

TEST_CASE("gluing along the empty subcomplex is disjoint union") {
    auto P = chain(1);
    auto X = from_maximal(P, {{"a", "0"}}, {{"a"}});
    auto B = from_maximal(P, {{"z", "0"}}, {{"z"}});
    auto A = full_subcomplex(B, {});
    auto G = glue(X, B, A, {});
    REQUIRE(G.complex.counts() == std::vector<std::size_t>{2});
}

TEST_CASE("gluing validates its embedding") {
    auto P = chain(2);
    auto X = from_maximal(P, {{"a", "0"}, {"b", "1"}}, {{"a", "b"}});
    auto B = from_maximal(P, {{"c", "0"}, {"d", "1"}}, {{"c", "d"}});

    // label mismatch: c has label 0, b has label 1
    auto A1 = full_subcomplex(B, {"c"});
    REQUIRE_THROWS_AS(glue(X, B, A1, {{"c", "b"}}), LabelMismatch);

    // non-injective map
    auto A2 = full_subcomplex(B, {"c", "d"});
    REQUIRE_THROWS_AS(glue(X, B, A2, {{"c", "a"}, {"d", "a"}}), NotEmbedding);

    // image simplex missing from X: send the edge {c,d} onto a non-edge
    auto X2 = from_maximal(P, {{"a", "0"}, {"b", "1"}, {"e", "1"}}, {{"a", "b"}, {"e"}});
    REQUIRE_THROWS_AS(glue(X2, B, A2, {{"c", "a"}, {"d", "e"}}), NotEmbedding);

    // map must cover exactly A's vertices
    REQUIRE_THROWS_AS(glue(X, B, A1, {}), NotEmbedding);
}

TEST_CASE("gluing refuses accidental collapses") {
    // X and B are both edges {a,b}; glue along the vertex a only. The free B
    // vertex b would land on X's b, creating a second copy of edge {a,b}
    // indistinguishable from X's. The rename machinery must prevent identifying
    // them, and the result is two distinct edges sharing a vertex.
    auto P = chain(1);
    auto X = from_maximal(P, {{"a", "0"}, {"b", "0"}}, {{"a", "b"}});
    auto B = from_maximal(P, {{"a", "0"}, {"b", "0"}}, {{"a", "b"}});
    auto A = full_subcomplex(B, {"a"});
    auto G = glue(X, B, A, {{"a", "a"}});
    REQUIRE(G.complex.counts() == std::vector<std::size_t>{3, 2});

    // but mapping A's whole edge onto X's edge, with nothing free, is fine
    auto Afull = full_subcomplex(B, {"a", "b"});
    auto G2 = glue(X, B, Afull, {{"a", "a"}, {"b", "b"}});
    REQUIRE(G2.complex == X);

    // CollapseError: B has an edge {a,b} glued along both endpoints separately
    // onto X vertices already joined by an edge. The B edge {a,b} is outside A
    // yet its image {a,b} already exists in X.
    auto X3 = from_maximal(P, {{"a", "0"}, {"b", "0"}}, {{"a", "b"}});
    auto B3 = from_maximal(P, {{"a", "0"}, {"b", "0"}}, {{"a", "b"}});
    auto A3 = Subcomplex{B3, {{"a"}, {"b"}}};
    REQUIRE_THROWS_AS(glue(X3, B3, A3, {{"a", "a"}, {"b", "b"}}), CollapseError);
}

TEST_CASE("glued sizes add up") {
    std::mt19937_64 rng(424242);
    auto P = chain(3);
    for (int trial = 0; trial < 20; ++trial) {
        // random complex on up to 6 vertices with monotone labels
        std::vector<std::pair<Vertex, Label>> verts;
        int n = 3 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i)
            verts.emplace_back("g" + std::to_string(i), std::to_string((3 * i) / n));
        std::vector<Simplex> maximal;
        for (int t = 0; t < 5; ++t) {
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
                k = static_cast<int>(rng() % n);
            std::set<int> ids = {i, j, k};
            Simplex s;
            for (int v : ids) s.push_back("g" + std::to_string(v));
            maximal.push_back(s);
        }
        auto X = from_maximal(P, verts, maximal);
        // glue a fresh triangle along one X edge if X has any edge
        std::vector<Simplex> edges;
        for (const auto& s : X.simplices)
            if (s.size() == 2) edges.push_back(s);
        if (edges.empty()) continue;
        const auto& e = edges[rng() % edges.size()];
        Label l0 = X.labels.at(e[0]), l1 = X.labels.at(e[1]);
        if (X.poset->lt(l1, l0)) continue;
        auto B = from_maximal(P, {{"p", l0}, {"q", l1}, {"r", "2"}}, {{"p", "q", "r"}});
        auto A = full_subcomplex(B, {"p", "q"});
        auto G = glue(X, B, A, {{"p", e[0]}, {"q", e[1]}});
        REQUIRE(G.complex.simplices.size() ==
                X.simplices.size() + B.simplices.size() - A.simplices.size());
        REQUIRE(G.x_part.simplices.size() == X.simplices.size());
        REQUIRE(G.b_part.simplices.size() == B.simplices.size());
        REQUIRE(G.a_part.simplices.size() == A.simplices.size());
    }
}

TEST_CASE("subdivision respects subcomplex inclusions") {
    // canonical naming means sd of a subcomplex is literally a subset of sd of
    // the whole complex
    auto K = corpus_flat("cone_on_circle");
    for (const auto& p : K.poset->elements()) {
        auto sub = restrict_le(K, p);
        auto sd_sub = barycentric_subdivision(sub);
        auto sd_K = barycentric_subdivision(K);
        for (const auto& s : sd_sub.simplices) REQUIRE(sd_K.contains(s));
    }
}
