#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "strathol/geometry.hpp"
#include "strathol/io.hpp"
#include "strathol/neighborhoods.hpp"

using namespace strathol;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Label> labels_csv(const std::string& text) {
    std::vector<Label> out;
    for (auto& part : split(text, ','))
        if (!part.empty()) out.push_back(part);
    if (out.empty()) throw Error("empty label list '" + text + "'");
    return out;
}

std::vector<Rat> rats_csv(const std::string& text) {
    std::vector<Rat> out;
    for (auto& part : split(text, ',')) out.push_back(rat_from_string(part));
    return out;
}

// "a<b,c" declares elements a, b, c and the relation a < b; a segment may
// chain several steps, "0<1<2".
PosetPtr poset_spec(const std::string& text) {
    std::vector<Label> elements;
    std::set<Label> seen;
    std::vector<std::pair<Label, Label>> rels;
    for (const auto& segment : split(text, ',')) {
        const auto steps = split(segment, '<');
        for (const auto& p : steps) {
            if (p.empty()) throw Error("malformed poset description '" + text + "'");
            if (seen.insert(p).second) elements.push_back(p);
        }
        for (std::size_t i = 0; i + 1 < steps.size(); ++i)
            rels.emplace_back(steps[i], steps[i + 1]);
    }
    return build_poset(std::move(elements), std::move(rels));
}

// "0:1,1/2:1,1:1" lists breakpoint:value pairs; empty means phi = 1
PLFunction phi_spec(const std::string& text) {
    if (text.empty()) return phi_one();
    std::vector<Rat> breakpoints, values;
    for (const auto& pair : split(text, ',')) {
        const auto parts = split(pair, ':');
        if (parts.size() != 2) throw Error("malformed phi pair '" + pair + "'");
        breakpoints.push_back(rat_from_string(parts[0]));
        values.push_back(rat_from_string(parts[1]));
    }
    return make_pl_function(std::move(breakpoints), std::move(values));
}

// "0:0,1:0,1,2" lists position sets separated by ':', positions by ','
std::vector<std::set<std::size_t>> chain_spec(const std::string& text) {
    std::vector<std::set<std::size_t>> chain;
    for (const auto& part : split(text, ':')) {
        std::set<std::size_t> positions;
        for (const auto& tok : split(part, ','))
            if (!tok.empty()) positions.insert(static_cast<std::size_t>(std::stoul(tok)));
        chain.push_back(std::move(positions));
    }
    return chain;
}

Coeff coeff_spec(const std::string& text) {
    if (text == "int") return Coeff::Z();
    if (text == "rat") return Coeff::Q();
    if (text.rfind("mod:", 0) == 0) return Coeff::Fp(Int(text.substr(4)));
    throw Error("unknown coefficient spec '" + text + "' (use int, rat, or mod:<prime>)");
}

StratComplex flatten(const DeltaComplex& D) {
    DeltaComplex once = delta_sd(D);
    try {
        return to_strat_complex(once);
    } catch (const NotSimplicial&) {
        return to_strat_complex(delta_sd(once));
    }
}

StratComplex load_strat(const std::string& path) {
    CorpusItem item = parse_item(read_text_file(path));
    if (std::holds_alternative<DeltaComplex>(item))
        return flatten(std::get<DeltaComplex>(item));
    return std::get<StratComplex>(item);
}

std::string fmt_table(const BettiTable& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.betti.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.betti[i]);
    }
    out += ")";
    std::string tor;
    for (std::size_t n = 0; n < t.torsion.size(); ++n)
        for (const Int& e : t.torsion[n]) {
            if (!tor.empty()) tor += ",";
            tor += "Z/" + e.str() + "@" + std::to_string(n);
        }
    if (!tor.empty()) out += "[" + tor + "]";
    return out;
}

void print_point(const SimplexPoint& x) {
    std::cout << "flag " << flag_text(x.flag) << "\n";
    std::string coords;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) coords += ",";
        coords += rat_to_string(x.coords[i]);
    }
    std::cout << "coords " << coords << "\n";
}

std::vector<RegularFlag> select_flags(const StratComplex& K,
                                      const std::vector<std::string>& specs) {
    bool all = specs.empty();
    for (const auto& s : specs)
        if (s == "all") all = true;
    if (all) {
        const Int n = count_regular_flags(*K.poset);
        if (n > (Int(1) << 20)) {
            std::cerr << "warning: poset has " << n.str()
                      << " regular flags; pass explicit --flag lists instead\n";
            throw Error("refusing to enumerate that many flags");
        }
        return regular_flags(K.poset);
    }
    std::vector<RegularFlag> flags;
    for (const auto& s : specs) flags.push_back(make_regular_flag(K.poset, labels_csv(s)));
    return flags;
}

// subcomplex description: `simplex <id> ...` lines naming simplices of B
Subcomplex parse_subcomplex(const std::string& text, const StratComplex& B) {
    std::set<Simplex> simplices;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> toks;
        std::string t;
        while (line >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] != "simplex")
            throw ParseError("line " + std::to_string(lineno) +
                             ": subcomplex files hold only simplex lines");
        Simplex s(toks.begin() + 1, toks.end());
        std::sort(s.begin(), s.end());
        if (!B.contains(s))
            throw ParseError("line " + std::to_string(lineno) +
                             ": not a simplex of the attached complex");
        for (std::size_t mask = 1; mask < (std::size_t(1) << s.size()); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (std::size_t(1) << i)) sub.push_back(s[i]);
            simplices.insert(std::move(sub));
        }
    }
    return Subcomplex{B, std::move(simplices)};
}

std::map<Vertex, Vertex> parse_vertex_map(const std::string& text) {
    std::map<Vertex, Vertex> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> toks;
        std::string t;
        while (line >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected '<source vertex> <target vertex>'");
        if (!out.emplace(toks[0], toks[1]).second)
            throw ParseError("line " + std::to_string(lineno) + ": vertex mapped twice");
    }
    return out;
}

long long euler_of(const std::set<Simplex>& simplices) {
    long long chi = 0;
    for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratified simplicial complexes: links, neighborhoods, exact homology"};
    app.require_subcommand(1);

    std::string file, file_b, sub_file, map_file, flag_csv, iflag_csv, poset_txt, p_label;
    std::string coeff_txt = "int", mode_txt, phi_txt, coords_txt, tcoords_txt, chain_txt;
    std::string weights_txt, t_txt, corpus_name, geom_op;
    std::vector<std::string> flag_specs;
    int sd_count = 1;
    int rc = 0;

    auto* show = app.add_subcommand("show", "summarize a complex file");
    show->add_option("file", file, "complex file")->required();
    show->callback([&] {
        CorpusItem item = parse_item(read_text_file(file));
        if (std::holds_alternative<DeltaComplex>(item))
            std::cout << delta_summary(std::get<DeltaComplex>(item)) << "\n";
        else
            std::cout << complex_summary(std::get<StratComplex>(item)) << "\n";
    });

    auto* sd = app.add_subcommand("sd", "barycentric subdivision, printed as a file");
    sd->add_option("file", file)->required();
    sd->add_option("--count", sd_count, "how many times")->check(CLI::NonNegativeNumber);
    sd->callback([&] {
        CorpusItem item = parse_item(read_text_file(file));
        if (std::holds_alternative<DeltaComplex>(item)) {
            DeltaComplex D = std::get<DeltaComplex>(item);
            for (int i = 0; i < sd_count; ++i) D = delta_sd(D);
            std::cout << print_delta(D);
        } else {
            StratComplex K = std::get<StratComplex>(item);
            for (int i = 0; i < sd_count; ++i) K = barycentric_subdivision(K);
            std::cout << print_complex(K);
        }
    });

    auto* link = app.add_subcommand("link", "simplicial link of a regular flag");
    link->add_option("file", file)->required();
    link->add_option("--flag", flag_csv, "comma-separated labels")->required();
    link->callback([&] {
        StratComplex K = load_strat(file);
        auto I = make_regular_flag(K.poset, labels_csv(flag_csv));
        std::cout << print_complex(simplicial_link(K, I).carrier());
    });

    auto* hood = app.add_subcommand("neighborhood", "standard neighborhood U(I)");
    hood->add_option("file", file)->required();
    hood->add_option("--flag", flag_csv)->required();
    hood->callback([&] {
        StratComplex K = load_strat(file);
        auto I = make_regular_flag(K.poset, labels_csv(flag_csv));
        std::cout << print_complex(stan_hood_flag(K, I).carrier());
    });

    auto* holink = app.add_subcommand("holink", "homology of the homotopy-link model");
    holink->add_option("file", file)->required();
    holink->add_option("--flag", flag_csv)->required();
    holink->add_option("--coeff", coeff_txt, "int, rat, or mod:<prime>");
    holink->callback([&] {
        StratComplex K = load_strat(file);
        auto I = make_regular_flag(K.poset, labels_csv(flag_csv));
        const Coeff coeff = coeff_spec(coeff_txt);
        std::cout << betti_report(homology(holink_model(K, I).complex, coeff), coeff);
    });

    auto* corpus_cmd = app.add_subcommand("corpus", "print a named corpus complex");
    corpus_cmd->add_option("name", corpus_name, "empty lists the names");
    corpus_cmd->callback([&] {
        if (corpus_name.empty()) {
            for (const auto& n : corpus_names()) std::cout << n << "\n";
        } else {
            std::cout << print_complex(corpus_flat(corpus_name));
        }
    });

    auto* hom = app.add_subcommand("homology", "Betti numbers and torsion of a file");
    hom->add_option("file", file)->required();
    hom->add_option("--coeff", coeff_txt, "int, rat, or mod:<prime>");
    hom->callback([&] {
        const Coeff coeff = coeff_spec(coeff_txt);
        std::cout << betti_report(homology(load_strat(file), coeff), coeff);
    });

    auto* va = app.add_subcommand("verify_a",
                                  "compare link and neighborhood models across flags");
    va->add_option("file", file)->required();
    va->add_option("--flag", flag_specs, "label list per use; default all regular flags");
    va->callback([&] {
        StratComplex K = load_strat(file);
        std::size_t passed = 0, total = 0;
        for (const auto& I : select_flags(K, flag_specs)) {
            const StratComplex link_c = simplicial_link(K, I).carrier();
            const StratComplex model_c = holink_model(K, I).complex;
            const BettiTable lz = normalized(homology(link_c, Coeff::Z()));
            const BettiTable mz = normalized(homology(model_c, Coeff::Z()));
            const BettiTable lq = normalized(homology(link_c, Coeff::Q()));
            const BettiTable mq = normalized(homology(model_c, Coeff::Q()));
            const bool ok = lz == mz && lq == mq;
            ++total;
            if (ok) ++passed;
            std::cout << "I=" << flag_text(I) << " link=" << fmt_table(lz)
                      << " model=" << fmt_table(mz) << " : " << (ok ? "pass" : "FAIL");
            if (link_c.empty() && model_c.empty()) std::cout << " (empty strata)";
            std::cout << "\n";
        }
        std::cout << "verify_a: " << passed << "/" << total << " flags pass\n";
        if (passed != total) rc = 1;
    });

    auto* vb = app.add_subcommand("verify_b",
                                  "glue two complexes and check the link decompositions");
    vb->add_option("file_x", file)->required();
    vb->add_option("file_b", file_b)->required();
    vb->add_option("--sub", sub_file, "subcomplex of the second complex")->required();
    vb->add_option("--map", map_file, "its vertex embedding into the first")->required();
    vb->add_option("--flag", flag_specs);
    vb->callback([&] {
        StratComplex X = load_strat(file);
        StratComplex B = load_strat(file_b);
        Subcomplex A = parse_subcomplex(read_text_file(sub_file), B);
        auto embed = parse_vertex_map(read_text_file(map_file));
        GlueResult g = glue(X, B, A, embed);
        std::size_t passed = 0, total = 0;
        for (const auto& I : select_flags(g.complex, flag_specs)) {
            const Subcomplex ly = simplicial_link(g.complex, I);
            const Subcomplex lx = simplicial_link(g.x_part.carrier(), I);
            const Subcomplex lb = simplicial_link(g.b_part.carrier(), I);
            const Subcomplex la = simplicial_link(g.a_part.carrier(), I);
            const StratComplex ambient = ly.carrier();
            const MVReport r = mayer_vietoris_check(
                ambient, Subcomplex{ambient, lx.simplices}, Subcomplex{ambient, lb.simplices},
                Subcomplex{ambient, la.simplices});
            ++total;
            if (r.pass) ++passed;
            std::cout << "I=" << flag_text(I) << " χ(Y)=" << euler_of(ly.simplices)
                      << " χ(X)=" << euler_of(lx.simplices) << " χ(B)=" << euler_of(lb.simplices)
                      << " χ(A)=" << euler_of(la.simplices) << " : "
                      << (r.pass ? "pass" : "FAIL (" + r.detail + ")") << "\n";
        }
        std::cout << "verify_b: " << passed << "/" << total << " flags pass\n";
        if (passed != total) rc = 1;
    });

    auto* geom = app.add_subcommand("geom", "coordinate calculus on literal rational points");
    geom->add_option("op", geom_op,
                     "point_stratum | s_coord | t_coord | in_phi_hood | rho | rho_homotopy | "
                     "aspire | phi_reparam | barycenter | psi")
        ->required();
    geom->add_option("--poset", poset_txt, "e.g. 0<1<2 or a<b,a<c")->required();
    geom->add_option("--flag", flag_csv, "flag J, weakly increasing");
    geom->add_option("--coords", coords_txt, "rational coordinates of x over J");
    geom->add_option("--p", p_label);
    geom->add_option("--mode", mode_txt, "eq | le | lt | ge | not_le | not_lt");
    geom->add_option("--phi", phi_txt, "breakpoint:value pairs; default constant 1");
    geom->add_option("--t", t_txt, "rational parameter");
    geom->add_option("--iflag", iflag_csv, "regular flag I for aspire");
    geom->add_option("--tcoords", tcoords_txt, "coordinates of the aspire parameter point");
    geom->add_option("--chain", chain_txt, "position sets, sets split by ':'");
    geom->add_option("--weights", weights_txt, "rational weights for psi");
    geom->callback([&] {
        PosetPtr P = poset_spec(poset_txt);
        auto point_arg = [&] {
            return make_point(make_flag(P, labels_csv(flag_csv)), rats_csv(coords_txt));
        };
        if (geom_op == "point_stratum") {
            std::cout << point_stratum(point_arg()) << "\n";
        } else if (geom_op == "s_coord") {
            RestrictMode mode;
            if (mode_txt == "eq") mode = RestrictMode::eq;
            else if (mode_txt == "le") mode = RestrictMode::le;
            else if (mode_txt == "lt") mode = RestrictMode::lt;
            else if (mode_txt == "ge") mode = RestrictMode::ge;
            else if (mode_txt == "not_le") mode = RestrictMode::not_le;
            else if (mode_txt == "not_lt") mode = RestrictMode::not_lt;
            else throw Error("unknown mode '" + mode_txt + "'");
            std::cout << rat_to_string(s_coord(point_arg(), p_label, mode)) << "\n";
        } else if (geom_op == "t_coord") {
            auto t = t_coord(point_arg(), p_label);
            std::cout << (t ? rat_to_string(*t) : std::string("undefined")) << "\n";
        } else if (geom_op == "in_phi_hood") {
            std::cout << (in_phi_hood(point_arg(), p_label, phi_spec(phi_txt)) ? "true" : "false")
                      << "\n";
        } else if (geom_op == "rho") {
            print_point(rho(point_arg(), p_label));
        } else if (geom_op == "rho_homotopy") {
            print_point(rho_homotopy(point_arg(), p_label, rat_from_string(t_txt)));
        } else if (geom_op == "aspire") {
            auto I = make_regular_flag(P, labels_csv(iflag_csv));
            auto t = make_point(as_flag(I), rats_csv(tcoords_txt));
            print_point(aspire_eval(point_arg(), I, t));
        } else if (geom_op == "phi_reparam") {
            print_point(phi_reparam(point_arg(), p_label, phi_spec(phi_txt)));
        } else if (geom_op == "barycenter") {
            print_point(weighted_barycenter(make_flag(P, labels_csv(flag_csv))));
        } else if (geom_op == "psi") {
            print_point(psi_eval(make_flag(P, labels_csv(flag_csv)), chain_spec(chain_txt),
                                 rats_csv(weights_txt)));
        } else {
            throw Error("unknown geom operation '" + geom_op + "'");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
