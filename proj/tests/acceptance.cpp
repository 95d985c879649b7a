// Acceptance gate: eight criteria, one line per criterion, exit code equal
// to the number of failures. All arithmetic is exact; nothing here owns a
// tolerance.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "strathol/complex.hpp"
#include "strathol/corpus.hpp"
#include "strathol/errors.hpp"
#include "strathol/flags.hpp"
#include "strathol/geometry.hpp"
#include "strathol/homology.hpp"
#include "strathol/neighborhoods.hpp"
#include "strathol/poset.hpp"

using namespace strathol;

namespace {

int failures = 0;

void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    if (ok) {
        std::cout << name << ": pass\n";
    } else {
        std::cout << name << ": FAIL" << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        ++failures;
    }
}

PosetPtr chain_poset_n(int n) {
    std::vector<Label> els;
    std::vector<std::pair<Label, Label>> rels;
    for (int i = 0; i < n; ++i) {
        els.push_back(std::to_string(i));
        if (i) rels.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return build_poset(els, rels);
}

void grow_flags(const PosetPtr& P, std::vector<Label>& cur, std::size_t max_len,
                std::vector<std::vector<Label>>& out) {
    if (cur.size() >= max_len) return;
    for (const auto& q : P->elements()) {
        if (!cur.empty() && !P->leq(cur.back(), q)) continue;
        cur.push_back(q);
        out.push_back(cur);
        grow_flags(P, cur, max_len, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Label>> all_flags_upto(const PosetPtr& P, std::size_t max_len) {
    std::vector<std::vector<Label>> out;
    std::vector<Label> cur;
    grow_flags(P, cur, max_len, out);
    return out;
}

Rat half_pow(int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r /= 2;
    return r;
}

long long euler_of(const std::set<Simplex>& simplices) {
    long long chi = 0;
    for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

BettiTable nz(const StratComplex& K) { return normalized(homology(K, Coeff::Z())); }
BettiTable nq(const StratComplex& K) { return normalized(homology(K, Coeff::Q())); }

// ---- random generators (chain posets only) --------------------------------

Flag random_chain_flag(std::mt19937_64& rng, const PosetPtr& P, int max_len) {
    std::uniform_int_distribution<std::size_t> pick(0, P->elements().size() - 1);
    std::uniform_int_distribution<int> len_d(1, max_len);
    std::vector<Label> es;
    const int len = len_d(rng);
    for (int i = 0; i < len; ++i) es.push_back(P->elements()[pick(rng)]);
    std::sort(es.begin(), es.end());  // single-character labels, so this is chain order
    return make_flag(P, es);
}

SimplexPoint random_point(std::mt19937_64& rng, const Flag& J) {
    std::uniform_int_distribution<int> num(0, 9);
    std::vector<int> raw(J.size());
    int sum = 0;
    while (sum == 0) {
        sum = 0;
        for (auto& r : raw) {
            r = num(rng);
            sum += r;
        }
    }
    std::vector<Rat> coords;
    for (int r : raw) coords.push_back(Rat(r) / sum);
    return make_point(J, coords);
}

// A point of |Delta^J| guaranteed to lie in every standard neighborhood named
// by `need`, with stratum exactly `sigma`: a convex combination of embedded
// weighted barycenters of subflags that keep only labels <= sigma, reach
// sigma, and meet every needed label below sigma.
SimplexPoint hood_sample(std::mt19937_64& rng, const Flag& J, const std::vector<Label>& need,
                         const Label& sigma) {
    const Poset& P = *J.poset;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pieces_d(1, 3);
    std::uniform_int_distribution<int> w_d(1, 9);

    const int pieces = pieces_d(rng);
    std::vector<int> w(pieces);
    int wsum = 0;
    for (auto& wi : w) {
        wi = w_d(rng);
        wsum += wi;
    }

    std::vector<Rat> acc(J.size(), Rat(0));
    for (int piece = 0; piece < pieces; ++piece) {
        std::set<std::size_t> S;
        for (std::size_t i = 0; i < J.size(); ++i)
            if (P.leq(J.entries[i], sigma) && coin(rng)) S.insert(i);
        auto ensure = [&](const Label& r) {
            for (auto i : S)
                if (J.entries[i] == r) return;
            std::vector<std::size_t> cand;
            for (std::size_t i = 0; i < J.size(); ++i)
                if (J.entries[i] == r) cand.push_back(i);
            S.insert(cand[rng() % cand.size()]);
        };
        ensure(sigma);
        for (const auto& r : need)
            if (P.leq(r, sigma)) ensure(r);

        std::vector<std::size_t> pos(S.begin(), S.end());
        std::vector<Label> sub;
        for (auto i : pos) sub.push_back(J.entries[i]);
        SimplexPoint b = weighted_barycenter(make_flag(J.poset, sub));
        for (std::size_t k = 0; k < pos.size(); ++k) acc[pos[k]] += Rat(w[piece]) * b.coords[k] / wsum;
    }
    return make_point(J, acc);
}

// ---- criterion 3 helper ----------------------------------------------------

bool pushout_ok(const GlueResult& g, const std::string& name, std::string& detail) {
    for (const auto& I : regular_flags(g.complex.poset)) {
        const Subcomplex ly = simplicial_link(g.complex, I);
        const Subcomplex lx = simplicial_link(g.x_part.carrier(), I);
        const Subcomplex lb = simplicial_link(g.b_part.carrier(), I);
        const Subcomplex la = simplicial_link(g.a_part.carrier(), I);
        if (euler_of(ly.simplices) !=
            euler_of(lx.simplices) + euler_of(lb.simplices) - euler_of(la.simplices)) {
            detail = name + ": Euler identity fails at I=" + flag_text(I);
            return false;
        }
        const StratComplex ambient = ly.carrier();
        const MVReport r =
            mayer_vietoris_check(ambient, Subcomplex{ambient, lx.simplices},
                                 Subcomplex{ambient, lb.simplices}, Subcomplex{ambient, la.simplices});
        if (!r.pass) {
            detail = name + " at I=" + flag_text(I) + ": " + r.detail;
            return false;
        }
    }
    return true;
}

// ---- fixed homology inputs --------------------------------------------------

StratComplex circle_complex() {
    auto P = build_poset({"p"}, {});
    return from_maximal(P, {{"0", "p"}, {"1", "p"}, {"2", "p"}},
                        {{"0", "1"}, {"0", "2"}, {"1", "2"}});
}

StratComplex torus_complex() {
    std::vector<std::pair<Vertex, Label>> verts;
    for (int i = 0; i < 7; ++i) verts.emplace_back(std::to_string(i), "p");
    auto v = [](int k) { return std::to_string(((k % 7) + 7) % 7); };
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({v(i), v(i + 1), v(i + 3)});
        tris.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return from_maximal(build_poset({"p"}, {}), verts, tris);
}

StratComplex projective_plane() {
    std::vector<Simplex> tris = {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"},
                                 {"1", "5", "6"}, {"1", "2", "6"}, {"2", "3", "5"},
                                 {"3", "4", "6"}, {"2", "4", "5"}, {"3", "5", "6"},
                                 {"2", "4", "6"}};
    std::vector<std::pair<Vertex, Label>> verts;
    for (int i = 1; i <= 6; ++i) verts.emplace_back(std::to_string(i), "p");
    return from_maximal(build_poset({"p"}, {}), verts, tris);
}

}  // namespace

int main() {
    run("link_model_agreement", [](std::string& detail) {
        for (const auto& [name, K] : corpus_battery()) {
            for (const auto& I : regular_flags(K.poset)) {
                const StratComplex link = simplicial_link(K, I).carrier();
                const StratComplex model = holink_model(K, I).complex;
                if (nz(link) != nz(model) || nq(link) != nq(model)) {
                    detail = name + " at I=" + flag_text(I);
                    return false;
                }
            }
        }
        return true;
    });

    run("known_links", [](std::string& detail) {
        const StratComplex cone = corpus_flat("cone_on_circle");
        const auto I_ab = make_regular_flag(cone.poset, {"a", "b"});
        const BettiTable circle{{1, 1}, {{}, {}}};
        if (nz(simplicial_link(cone, I_ab).carrier()) != circle ||
            nz(holink_model(cone, I_ab).complex) != circle) {
            detail = "cone link over [a,b] is not a circle";
            return false;
        }
        const StratComplex edge = corpus_flat("stratified_simplex:0,1");
        const auto I_01 = make_regular_flag(edge.poset, {"0", "1"});
        const BettiTable point{{1}, {{}}};
        if (nz(simplicial_link(edge, I_01).carrier()) != point ||
            nz(holink_model(edge, I_01).complex) != point) {
            detail = "edge link over [0,1] is not a point";
            return false;
        }
        return true;
    });

    run("pushout_exactness", [](std::string& detail) {
        // two edges sharing a vertex
        {
            auto P = build_poset({"p"}, {});
            StratComplex X = from_maximal(P, {{"u", "p"}, {"v", "p"}}, {{"u", "v"}});
            StratComplex B = from_maximal(P, {{"v", "p"}, {"w", "p"}}, {{"v", "w"}});
            Subcomplex A = full_subcomplex(B, {"v"});
            if (!pushout_ok(glue(X, B, A, {{"v", "v"}}), "edge wedge", detail)) return false;
        }
        // cone capped onto one cylinder rim
        {
            StratComplex X = corpus_flat("cylinder");
            StratComplex B = corpus_flat("cone_on_circle");
            Subcomplex A = full_subcomplex(B, {"r0", "r1", "r2"});
            std::map<Vertex, Vertex> embed{{"r0", "u0"}, {"r1", "u1"}, {"r2", "u2"}};
            if (!pushout_ok(glue(X, B, A, embed), "capped cylinder", detail)) return false;
        }
        // the flattened pinched torus, reassembled from its two closed halves
        {
            const StratComplex Y = corpus_flat("pinched_torus");
            auto cell_of = [](const Vertex& v) {
                auto bang = v.find('!');
                return bang == std::string::npos ? v : v.substr(0, bang);
            };
            const std::set<std::string> xcells{"x", "m", "y", "a", "g1", "v1", "v2", "t1", "t4"};
            const std::set<std::string> bcells{"x", "m", "y", "b", "g2", "v1", "v2", "t2", "t3"};
            const std::set<std::string> acells{"x", "m", "y", "v1", "v2"};
            std::set<Vertex> xv, bv;
            for (const auto& [v, l] : Y.labels) {
                if (xcells.count(cell_of(v))) xv.insert(v);
                if (bcells.count(cell_of(v))) bv.insert(v);
            }
            StratComplex X = full_subcomplex(Y, xv).carrier();
            StratComplex B = full_subcomplex(Y, bv).carrier();
            std::set<Vertex> av;
            std::map<Vertex, Vertex> embed;
            for (const auto& [v, l] : B.labels)
                if (acells.count(cell_of(v))) {
                    av.insert(v);
                    embed[v] = v;
                }
            GlueResult g = glue(X, B, full_subcomplex(B, av), embed);
            if (g.complex != Y) {
                detail = "pinched torus does not reassemble from its halves";
                return false;
            }
            if (!pushout_ok(g, "pinched torus assembly", detail)) return false;
        }
        // suspension built from two cones over the same circle
        {
            StratComplex X = corpus_flat("cone_on_circle");
            StratComplex B = from_maximal(
                X.poset, {{"d", "a"}, {"r0", "b"}, {"r1", "b"}, {"r2", "b"}},
                {{"d", "r0", "r1"}, {"d", "r0", "r2"}, {"d", "r1", "r2"}});
            Subcomplex A = full_subcomplex(B, {"r0", "r1", "r2"});
            std::map<Vertex, Vertex> embed{{"r0", "r0"}, {"r1", "r1"}, {"r2", "r2"}};
            GlueResult g = glue(X, B, A, embed);
            if (nz(g.complex).betti != std::vector<std::size_t>{1, 0, 1}) {
                detail = "two cones over a circle do not close to a sphere";
                return false;
            }
            if (!pushout_ok(g, "double cone", detail)) return false;
        }
        // two triangles sharing an edge
        {
            auto P = build_poset({"p"}, {});
            StratComplex X = from_maximal(P, {{"x0", "p"}, {"x1", "p"}, {"x2", "p"}},
                                          {{"x0", "x1", "x2"}});
            StratComplex B = from_maximal(P, {{"y0", "p"}, {"y1", "p"}, {"y2", "p"}},
                                          {{"y0", "y1", "y2"}});
            Subcomplex A = full_subcomplex(B, {"y0", "y1"});
            std::map<Vertex, Vertex> embed{{"y0", "x0"}, {"y1", "x1"}};
            if (!pushout_ok(glue(X, B, A, embed), "triangle pair", detail)) return false;
        }
        // disjoint union: empty gluing locus
        {
            auto P = chain_poset_n(2);
            StratComplex X = from_maximal(P, {{"a", "0"}, {"b", "1"}}, {{"a", "b"}});
            StratComplex B = from_maximal(P, {{"c", "0"}, {"d", "1"}}, {{"c", "d"}});
            Subcomplex A{B, {}};
            if (!pushout_ok(glue(X, B, A, {}), "disjoint union", detail)) return false;
        }
        return true;
    });

    run("barycenter_identities", [](std::string& detail) {
        auto P = chain_poset_n(5);
        for (const auto& entries : all_flags_upto(P, 5)) {
            const Flag J = make_flag(P, entries);
            const SimplexPoint b = weighted_barycenter(J);
            std::vector<Label> blocks;
            for (const auto& e : entries)
                if (blocks.empty() || blocks.back() != e) blocks.push_back(e);
            const int n = static_cast<int>(blocks.size()) - 1;
            for (int k = 0; k <= n; ++k) {
                const Rat not_le = s_coord(b, blocks[k], RestrictMode::not_le);
                const Rat eq = s_coord(b, blocks[k], RestrictMode::eq);
                if (k < n && (not_le != half_pow(k + 1) || eq != half_pow(k + 1))) {
                    detail = "block identity fails for J=" + flag_text(J);
                    return false;
                }
                if (k == n && (not_le != 0 || eq != half_pow(n))) {
                    detail = "top block fails for J=" + flag_text(J);
                    return false;
                }
            }
            const std::set<Label> present(entries.begin(), entries.end());
            for (const auto& p : P->elements()) {
                if (present.count(p)) continue;
                if (s_coord(b, p, RestrictMode::eq) != 0) {
                    detail = "absent label has mass, J=" + flag_text(J);
                    return false;
                }
                int k0 = -1;
                for (int k = 0; k <= n; ++k)
                    if (!P->leq(blocks[k], p)) {
                        k0 = k;
                        break;
                    }
                const Rat not_le = s_coord(b, p, RestrictMode::not_le);
                const Rat want = k0 < 0 ? Rat(0) : half_pow(k0);
                if (not_le != want || (k0 >= 0 && !(not_le > 0))) {
                    detail = "exclusion inequality fails for J=" + flag_text(J) + " p=" + p;
                    return false;
                }
            }
        }
        return true;
    });

    run("psi_membership", [](std::string& detail) {
        const std::vector<PosetPtr> posets = {
            chain_poset_n(3), build_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})};
        for (const auto& P : posets) {
            for (const auto& entries : all_flags_upto(P, 4)) {
                const Flag J = make_flag(P, entries);
                const std::size_t m = entries.size();
                for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
                    std::set<std::size_t> S;
                    for (std::size_t i = 0; i < m; ++i)
                        if (mask & (std::size_t(1) << i)) S.insert(i);
                    const SimplexPoint v = psi_eval(J, {S}, {Rat(1)});
                    std::set<Label> ls;
                    for (auto i : S) ls.insert(entries[i]);
                    for (const auto& p : P->elements()) {
                        bool cond = ls.count(p) != 0;
                        if (!cond) {
                            cond = true;
                            for (const auto& q : ls)
                                if (!P->lt(q, p)) {
                                    cond = false;
                                    break;
                                }
                        }
                        if (in_phi_hood(v, p, phi_one()) != cond) {
                            detail = "J=" + flag_text(J) + " p=" + p;
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    run("random_property_suites", [](std::string& detail) {
        // coordinate identities
        {
            std::mt19937_64 rng(0xC0FFEE);
            std::uniform_int_distribution<int> n_d(2, 4);
            for (int iter = 0; iter < 1100; ++iter) {
                auto P = chain_poset_n(n_d(rng));
                const Flag J = random_chain_flag(rng, P, 5);
                const SimplexPoint x = random_point(rng, J);
                Label stratum;
                for (std::size_t i = 0; i < J.size(); ++i)
                    if (x.coords[i] > 0) stratum = J.entries[i];  // entries increase
                if (point_stratum(x) != stratum) {
                    detail = "point_stratum disagrees with the support maximum";
                    return false;
                }
                for (const auto& p : P->elements()) {
                    const Rat eq = s_coord(x, p, RestrictMode::eq);
                    const Rat le = s_coord(x, p, RestrictMode::le);
                    const Rat lt = s_coord(x, p, RestrictMode::lt);
                    const Rat nle = s_coord(x, p, RestrictMode::not_le);
                    const Rat nlt = s_coord(x, p, RestrictMode::not_lt);
                    const Rat ge = s_coord(x, p, RestrictMode::ge);
                    if (le != lt + eq || nle != 1 - le || nlt != 1 - lt || ge != nlt) {
                        detail = "s-coordinate splits fail at p=" + p;
                        return false;
                    }
                    const auto t = t_coord(x, p);
                    if (t.has_value() != (nlt > 0)) {
                        detail = "t-coordinate defined on the wrong locus";
                        return false;
                    }
                    if (t && (*t != nle / nlt || *t < 0 || *t > 1)) {
                        detail = "t-coordinate value wrong at p=" + p;
                        return false;
                    }
                    if (in_phi_hood(x, p, phi_one()) != (nle <= eq)) {
                        detail = "neighborhood membership disagrees with s-coordinates";
                        return false;
                    }
                }
            }
        }
        // the block retractions preserve standard neighborhoods
        {
            std::mt19937_64 rng(0x5150);
            std::uniform_int_distribution<int> n_d(2, 4);
            std::uniform_int_distribution<int> t_num(0, 8);
            for (int iter = 0; iter < 1100; ++iter) {
                auto P = chain_poset_n(n_d(rng));
                const Flag J = random_chain_flag(rng, P, 6);
                std::set<Label> ls(J.entries.begin(), J.entries.end());
                std::vector<Label> labels(ls.begin(), ls.end());
                std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
                Label q = labels[pick(rng)], p = labels[pick(rng)];
                if (P->lt(p, q)) std::swap(q, p);  // ensure q <= p
                const Label sigma = labels[pick(rng)];
                const SimplexPoint x = hood_sample(rng, J, {q, p}, sigma);
                if (!in_phi_hood(x, q, phi_one()) || !in_phi_hood(x, p, phi_one())) {
                    detail = "hood sampler left its target neighborhoods";
                    return false;
                }
                const SimplexPoint y = rho(x, p);
                const Rat le_p = s_coord(x, p, RestrictMode::le);
                if (s_coord(y, q, RestrictMode::eq) != s_coord(x, q, RestrictMode::eq) / le_p ||
                    s_coord(y, q, RestrictMode::not_le) !=
                        1 - s_coord(x, q, RestrictMode::le) / le_p) {
                    detail = "retraction coordinate identities fail";
                    return false;
                }
                if (!in_phi_hood(y, q, phi_one())) {
                    detail = "retraction leaves the lower neighborhood";
                    return false;
                }
                const Rat t = Rat(t_num(rng)) / 8;
                const SimplexPoint z = rho_homotopy(x, p, t);
                if (!in_phi_hood(z, q, phi_one()) || !in_phi_hood(z, p, phi_one())) {
                    detail = "retraction path leaves a neighborhood";
                    return false;
                }
                if (rho_homotopy(x, p, Rat(0)) != x || rho_homotopy(x, p, Rat(1)) != y) {
                    detail = "retraction path endpoints wrong";
                    return false;
                }
            }
        }
        // almost stratum-preserving retraction: stratum preservation
        {
            std::mt19937_64 rng(0x90210);
            std::uniform_int_distribution<int> n_d(2, 4);
            for (int iter = 0; iter < 1100; ++iter) {
                auto P = chain_poset_n(n_d(rng));
                const Flag J = random_chain_flag(rng, P, 6);
                std::set<Label> ls(J.entries.begin(), J.entries.end());
                std::vector<Label> labels(ls.begin(), ls.end());
                std::vector<Label> ivec;
                for (const auto& l : labels)
                    if (rng() % 2) ivec.push_back(l);
                if (ivec.empty()) ivec.push_back(labels[rng() % labels.size()]);
                const RegularFlag I = make_regular_flag(P, ivec);
                const SimplexPoint x = hood_sample(rng, J, ivec, I.max());
                std::uniform_int_distribution<int> num(0, 5);
                std::vector<Rat> tc(ivec.size());
                int sum = 0;
                while (sum == 0) {
                    sum = 0;
                    for (auto& c : tc) {
                        int r = num(rng);
                        c = Rat(r);
                        sum += r;
                    }
                }
                for (auto& c : tc) c /= sum;
                const SimplexPoint t = make_point(as_flag(I), tc);
                const SimplexPoint R = aspire_eval(x, I, t);
                Label expect;
                for (std::size_t i = 0; i < ivec.size(); ++i)
                    if (tc[i] > 0) expect = ivec[i];
                if (point_stratum(R) != expect) {
                    detail = "retraction stratum is not the top weighted label";
                    return false;
                }
                for (const auto& r : ivec)
                    if (!in_phi_hood(R, r, phi_one())) {
                        detail = "retraction image leaves the neighborhood system";
                        return false;
                    }
                // a vertex of the parameter simplex recovers the block retraction
                const Label qv = ivec[rng() % ivec.size()];
                std::vector<Rat> vc(ivec.size(), Rat(0));
                for (std::size_t i = 0; i < ivec.size(); ++i)
                    if (ivec[i] == qv) vc[i] = 1;
                if (aspire_eval(x, I, make_point(as_flag(I), vc)) != rho(x, qv)) {
                    detail = "vertex parameter does not recover the block retraction";
                    return false;
                }
            }
        }
        // almost stratum-preserving retraction: fixity on low strata
        {
            std::mt19937_64 rng(0xFEED);
            std::uniform_int_distribution<int> n_d(2, 4);
            for (int iter = 0; iter < 1100; ++iter) {
                auto P = chain_poset_n(n_d(rng));
                const Flag J = random_chain_flag(rng, P, 6);
                std::set<Label> ls(J.entries.begin(), J.entries.end());
                std::vector<Label> labels(ls.begin(), ls.end());
                std::vector<Label> ivec;
                for (const auto& l : labels)
                    if (rng() % 2) ivec.push_back(l);
                if (ivec.empty()) ivec.push_back(labels[rng() % labels.size()]);
                const RegularFlag I = make_regular_flag(P, ivec);
                const Label p = ivec[rng() % ivec.size()];
                std::vector<Label> low;
                for (const auto& l : labels)
                    if (P->leq(l, p)) low.push_back(l);
                const Label sigma = low[rng() % low.size()];
                const SimplexPoint x = hood_sample(rng, J, ivec, sigma);
                std::uniform_int_distribution<int> num(0, 5);
                std::vector<Rat> tc(ivec.size(), Rat(0));
                int sum = 0;
                while (sum == 0) {
                    sum = 0;
                    for (std::size_t i = 0; i < ivec.size(); ++i) {
                        if (!P->leq(p, ivec[i])) continue;
                        int r = num(rng);
                        tc[i] = Rat(r);
                        sum += r;
                    }
                }
                for (auto& c : tc) c /= sum;
                if (aspire_eval(x, I, make_point(as_flag(I), tc)) != x) {
                    detail = "low-stratum point moved by a high parameter";
                    return false;
                }
            }
        }
        // membership reparametrization and its endpoints
        {
            std::mt19937_64 rng(0x314159);
            std::uniform_int_distribution<int> n_d(2, 4);
            const std::vector<PLFunction> phis = {
                phi_one(), make_pl_function({Rat(0), Rat(1)}, {Rat(1, 3), Rat(1, 3)}),
                make_pl_function({Rat(0), Rat(1)}, {Rat(0), Rat(1)}),
                make_pl_function({Rat(0), Rat(1, 2), Rat(1)}, {Rat(1), Rat(1, 2), Rat(1)})};
            int moved = 0;
            for (int iter = 0; iter < 1100; ++iter) {
                auto P = chain_poset_n(n_d(rng));
                const Flag J = random_chain_flag(rng, P, 5);
                const SimplexPoint x = random_point(rng, J);
                const Label p = (rng() % 5 == 0)
                                    ? P->elements()[rng() % P->elements().size()]
                                    : J.entries[rng() % J.entries.size()];
                const PLFunction& phi = phis[rng() % phis.size()];
                const SimplexPoint y = phi_reparam(x, p, phi);
                if (y != x) ++moved;
                if (in_phi_hood(y, p, phi) != in_phi_hood(x, p, phi_one())) {
                    detail = "reparametrization does not exchange the neighborhoods";
                    return false;
                }
                if (s_coord(y, p, RestrictMode::lt) != s_coord(x, p, RestrictMode::lt) ||
                    s_coord(y, p, RestrictMode::not_lt) != s_coord(x, p, RestrictMode::not_lt)) {
                    detail = "reparametrization disturbed the strictly-below block";
                    return false;
                }
                const auto t = t_coord(x, p);
                if (t) {
                    const Rat phi_val = pl_eval(phi, s_coord(x, p, RestrictMode::not_lt));
                    const auto ty = t_coord(y, p);
                    if (!ty || *ty != reparam_t(*t, phi_val)) {
                        detail = "t-coordinate does not follow the reparametrization";
                        return false;
                    }
                    if ((*t == 0 || *t == 1) && y != x) {
                        detail = "endpoint of the t-interval moved";
                        return false;
                    }
                    // weak monotonicity in t
                    const Rat t2 = Rat(static_cast<int>(rng() % 9)) / 8;
                    const Rat r1 = reparam_t(*t, phi_val), r2 = reparam_t(t2, phi_val);
                    if ((*t < t2 && r1 > r2) || (*t > t2 && r1 < r2)) {
                        detail = "reparametrization is not monotone";
                        return false;
                    }
                }
                bool carries = false;
                for (const auto& e : J.entries) carries |= (e == p);
                if (!carries && y != x) {
                    detail = "reparametrization moved a point without the label";
                    return false;
                }
            }
            if (moved < 50) {
                detail = "reparametrization suite degenerated";
                return false;
            }
        }
        return true;
    });

    run("homology_oracle", [](std::string& detail) {
        if (homology(circle_complex(), Coeff::Z()) != BettiTable{{1, 1}, {{}, {}}}) {
            detail = "circle";
            return false;
        }
        if (homology(corpus_flat("boundary:0,1,2,3"), Coeff::Z()) !=
            BettiTable{{1, 0, 1}, {{}, {}, {}}}) {
            detail = "2-sphere";
            return false;
        }
        if (homology(torus_complex(), Coeff::Z()) != BettiTable{{1, 2, 1}, {{}, {}, {}}}) {
            detail = "torus";
            return false;
        }
        const StratComplex rp = projective_plane();
        if (homology(rp, Coeff::Z()) != BettiTable{{1, 0, 0}, {{}, {Int(2)}, {}}}) {
            detail = "projective plane over the integers";
            return false;
        }
        if (homology(rp, Coeff::Fp(2)).betti != std::vector<std::size_t>{1, 1, 1}) {
            detail = "projective plane mod 2";
            return false;
        }
        return true;
    });

    run("subdivision_invariants", [](std::string& detail) {
        for (const auto& name : corpus_names()) {
            if (name.find('<') != std::string::npos) continue;  // parameterized placeholder
            const CorpusItem item = corpus(name);
            if (const auto* D = std::get_if<DeltaComplex>(&item)) {
                if (delta_sd(*D).euler() != D->euler()) {
                    detail = name + ": cell subdivision changed the Euler characteristic";
                    return false;
                }
            }
            const StratComplex K = corpus_flat(name);
            if (barycentric_subdivision(K).euler() != K.euler()) {
                detail = name + ": subdivision changed the Euler characteristic";
                return false;
            }
        }
        for (const auto& [name, K] : corpus_battery()) {
            if (barycentric_subdivision(K).euler() != K.euler()) {
                detail = name + ": subdivision changed the Euler characteristic";
                return false;
            }
            for (const auto& p : K.poset->elements()) {
                if (barycentric_subdivision(restrict_le(K, p)) !=
                    restrict_le(barycentric_subdivision(K), p)) {
                    detail = name + ": subdivision does not commute with restriction at " + p;
                    return false;
                }
            }
        }
        return true;
    });

    std::cout << (failures == 0 ? "acceptance: all criteria pass\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAIL\n");
    return failures;
}
