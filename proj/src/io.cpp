#include "strathol/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "strathol/poset.hpp"

namespace strathol {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

ParseError at_line(std::size_t n, const std::string& what) {
    return ParseError("line " + std::to_string(n) + ": " + what);
}

struct FileData {
    bool has_poset = false;
    std::vector<Label> labels;
    std::set<Label> label_set;
    std::vector<std::pair<Label, Label>> rels;
    std::vector<std::pair<Vertex, Label>> vertices;
    std::set<Vertex> vertex_set;
    std::vector<Simplex> maximal;
    std::vector<std::pair<int, DeltaCell>> cells;
};

FileData scan(const std::string& text) {
    FileData data;
    std::istringstream in(text);
    std::string raw;
    bool in_poset = false;
    bool body_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::vector<std::string> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "poset") {
            if (toks.size() != 1) throw at_line(lineno, "the poset line takes no arguments");
            if (data.has_poset) throw at_line(lineno, "duplicate poset section");
            if (body_seen) throw at_line(lineno, "the poset section must come first");
            data.has_poset = true;
            in_poset = true;
        } else if (head == "rel") {
            if (!in_poset) throw at_line(lineno, "rel outside the poset section");
            if (toks.size() != 3) throw at_line(lineno, "expected: rel <p> <q>");
            if (!data.label_set.count(toks[1]))
                throw at_line(lineno, "relation mentions undeclared label '" + toks[1] + "'");
            if (!data.label_set.count(toks[2]))
                throw at_line(lineno, "relation mentions undeclared label '" + toks[2] + "'");
            data.rels.emplace_back(toks[1], toks[2]);
        } else if (head == "vertex") {
            in_poset = false;
            body_seen = true;
            if (toks.size() != 3) throw at_line(lineno, "expected: vertex <id> <label>");
            if (!data.label_set.count(toks[2]))
                throw at_line(lineno, "unknown label '" + toks[2] + "'");
            if (!data.vertex_set.insert(toks[1]).second)
                throw at_line(lineno, "duplicate vertex identifier '" + toks[1] + "'");
            data.vertices.emplace_back(toks[1], toks[2]);
        } else if (head == "simplex") {
            in_poset = false;
            body_seen = true;
            if (toks.size() < 2) throw at_line(lineno, "expected: simplex <id> ...");
            Simplex s(toks.begin() + 1, toks.end());
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw at_line(lineno, "repeated vertex in simplex");
            for (const auto& v : s)
                if (!data.vertex_set.count(v))
                    throw at_line(lineno, "simplex uses undeclared vertex '" + v + "'");
            if (s.size() > 25) throw at_line(lineno, "simplex has too many vertices");
            data.maximal.push_back(std::move(s));
        } else if (head == "cell") {
            in_poset = false;
            body_seen = true;
            if (toks.size() < 4) throw at_line(lineno, "expected: cell <dim> <id> : <faces> : <flag>");
            int dim = -1;
            try {
                std::size_t used = 0;
                dim = std::stoi(toks[1], &used);
                if (used != toks[1].size()) dim = -1;
            } catch (const std::exception&) {
                dim = -1;
            }
            if (dim < 0) throw at_line(lineno, "cell dimension must be a nonnegative integer");
            DeltaCell cell;
            cell.id = toks[2];
            std::size_t k = 3;
            if (k >= toks.size() || toks[k] != ":")
                throw at_line(lineno, "expected ':' after the cell identifier");
            for (++k; k < toks.size() && toks[k] != ":"; ++k) cell.faces.push_back(toks[k]);
            if (k >= toks.size()) throw at_line(lineno, "expected a second ':' before the flag");
            for (++k; k < toks.size(); ++k) {
                if (toks[k] == ":") throw at_line(lineno, "unexpected extra ':'");
                cell.flag.push_back(toks[k]);
            }
            data.cells.emplace_back(dim, std::move(cell));
        } else if (in_poset) {
            if (toks.size() != 1) throw at_line(lineno, "malformed poset entry");
            if (head.find(',') != std::string::npos)
                throw at_line(lineno, "malformed label '" + head + "'");
            if (!data.label_set.insert(head).second)
                throw at_line(lineno, "duplicate label '" + head + "'");
            data.labels.push_back(head);
        } else {
            throw at_line(lineno, "unknown directive '" + head + "'");
        }
    }
    if (!data.cells.empty() && (!data.vertices.empty() || !data.maximal.empty()))
        throw ParseError("a file cannot mix cell lines with vertex/simplex lines");
    return data;
}

PosetPtr poset_of(const FileData& data) { return build_poset(data.labels, data.rels); }

StratComplex complex_of(const FileData& data) {
    std::map<Vertex, Label> labels(data.vertices.begin(), data.vertices.end());
    std::set<Simplex> simplices;
    for (const auto& s : data.maximal)
        for (std::size_t mask = 1; mask < (std::size_t(1) << s.size()); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (std::size_t(1) << i)) sub.push_back(s[i]);
            simplices.insert(std::move(sub));
        }
    return make_complex(poset_of(data), std::move(labels), std::move(simplices));
}

DeltaComplex delta_of(const FileData& data) {
    int dim = -1;
    for (const auto& [d, cell] : data.cells) dim = std::max(dim, d);
    std::vector<std::vector<DeltaCell>> cells(dim + 1);
    for (const auto& [d, cell] : data.cells) cells[d].push_back(cell);
    return make_delta_complex(poset_of(data), std::move(cells));
}

std::string poset_text(const Poset& P) {
    std::string out = "poset\n";
    for (const auto& p : P.elements()) out += p + "\n";
    for (const auto& p : P.elements())
        for (const auto& q : P.elements())
            if (p != q && P.leq(p, q)) out += "rel " + p + " " + q + "\n";
    return out;
}

std::string size_word(std::size_t dim, std::size_t count) {
    switch (dim) {
        case 0: return count == 1 ? "vertex" : "vertices";
        case 1: return count == 1 ? "edge" : "edges";
        case 2: return count == 1 ? "triangle" : "triangles";
        case 3: return count == 1 ? "tetrahedron" : "tetrahedra";
        default: return std::to_string(dim) + "-cells";
    }
}

std::string summary_of_counts(const std::vector<std::size_t>& counts, long long chi) {
    if (counts.empty()) return "0 simplices";
    std::string out;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (n) out += ", ";
        out += std::to_string(counts[n]) + " " + size_word(n, counts[n]);
    }
    out += ", χ=" + std::to_string(chi);
    return out;
}

}  // namespace

StratComplex parse_complex(const std::string& text) {
    FileData data = scan(text);
    if (!data.cells.empty())
        throw ParseError("cell lines describe a Delta-complex, not a simplicial complex");
    return complex_of(data);
}

DeltaComplex parse_delta(const std::string& text) {
    FileData data = scan(text);
    if (data.cells.empty() && (!data.vertices.empty() || !data.maximal.empty()))
        throw ParseError("vertex/simplex lines describe a simplicial complex, not a Delta-complex");
    return delta_of(data);
}

bool is_delta_text(const std::string& text) { return !scan(text).cells.empty(); }

CorpusItem parse_item(const std::string& text) {
    FileData data = scan(text);
    if (!data.cells.empty()) return delta_of(data);
    return complex_of(data);
}

std::string print_complex(const StratComplex& K) {
    std::string out = poset_text(*K.poset);
    for (const auto& [v, p] : K.labels) out += "vertex " + v + " " + p + "\n";
    for (const auto& s : K.simplices) {
        bool maximal = true;
        for (const auto& t : K.simplices)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::string line = "simplex";
        for (const auto& v : s) line += " " + v;
        out += line + "\n";
    }
    return out;
}

std::string print_delta(const DeltaComplex& D) {
    std::string out = poset_text(*D.poset);
    for (int n = 0; n <= D.dim(); ++n)
        for (const auto& cell : D.cells[n]) {
            std::string line = "cell " + std::to_string(n) + " " + cell.id + " :";
            for (const auto& f : cell.faces) line += " " + f;
            line += " :";
            for (const auto& p : cell.flag) line += " " + p;
            out += line + "\n";
        }
    return out;
}

std::string print_item(const CorpusItem& item) {
    if (std::holds_alternative<DeltaComplex>(item))
        return print_delta(std::get<DeltaComplex>(item));
    return print_complex(std::get<StratComplex>(item));
}

std::string complex_summary(const StratComplex& K) {
    return summary_of_counts(K.counts(), K.euler());
}

std::string delta_summary(const DeltaComplex& D) {
    return summary_of_counts(D.counts(), D.euler());
}

std::string betti_report(const BettiTable& t, const Coeff& coeff) {
    std::string out;
    for (std::size_t n = 0; n < t.betti.size(); ++n) {
        std::string line = "H_" + std::to_string(n) + ": ";
        std::vector<std::string> parts;
        const std::size_t b = t.betti[n];
        if (b > 0) {
            std::string free;
            switch (coeff.kind) {
                case Coeff::Kind::integers: free = "Z"; break;
                case Coeff::Kind::rationals: free = "Q"; break;
                case Coeff::Kind::mod_p:
                    free = b > 1 ? "(Z/" + coeff.p.str() + ")" : "Z/" + coeff.p.str();
                    break;
            }
            if (b > 1) free += "^" + std::to_string(b);
            parts.push_back(std::move(free));
        }
        if (coeff.kind == Coeff::Kind::integers && n < t.torsion.size())
            for (const Int& e : t.torsion[n]) parts.push_back("Z/" + e.str());
        if (parts.empty()) {
            line += "0";
        } else {
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) line += " + ";
                line += parts[i];
            }
        }
        out += line + "\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace strathol
