#include "strathol/cells.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace strathol {

std::vector<std::size_t> DeltaComplex::counts() const {
    std::vector<std::size_t> c;
    c.reserve(cells.size());
    for (const auto& layer : cells) c.push_back(layer.size());
    return c;
}

long long DeltaComplex::euler() const {
    long long chi = 0;
    int sign = 1;
    for (const auto& layer : cells) {
        chi += sign * static_cast<long long>(layer.size());
        sign = -sign;
    }
    return chi;
}

const DeltaCell* DeltaComplex::find(int dim, const std::string& id) const {
    if (dim < 0 || dim >= static_cast<int>(cells.size())) return nullptr;
    for (const auto& c : cells[dim])
        if (c.id == id) return &c;
    return nullptr;
}

const DeltaCell& DeltaComplex::at(int dim, const std::string& id) const {
    const DeltaCell* c = find(dim, id);
    if (!c)
        throw UnknownElement("no " + std::to_string(dim) + "-cell named '" + id + "'");
    return *c;
}

DeltaComplex make_delta_complex(PosetPtr poset, std::vector<std::vector<DeltaCell>> cells) {
    if (!poset) throw Error("cell complex needs a poset");
    while (!cells.empty() && cells.back().empty()) cells.pop_back();
    std::set<std::string> ids;
    for (std::size_t n = 0; n < cells.size(); ++n) {
        for (const auto& c : cells[n]) {
            if (c.id.empty()) throw Error("empty cell identifier");
            if (!ids.insert(c.id).second)
                throw Error("duplicate cell identifier '" + c.id + "'");
            if (c.faces.size() != (n == 0 ? 0 : n + 1))
                throw Error("cell '" + c.id + "' of dimension " + std::to_string(n) +
                            " must list " + std::to_string(n == 0 ? 0 : n + 1) + " faces");
            if (c.flag.size() != n + 1)
                throw Error("cell '" + c.id + "' needs a flag of length " + std::to_string(n + 1));
            make_flag(poset, c.flag);  // chain check
        }
    }
    DeltaComplex D{std::move(poset), std::move(cells)};
    for (std::size_t n = 1; n < D.cells.size(); ++n)
        for (const auto& c : D.cells[n])
            for (const auto& f : c.faces)
                if (!D.find(static_cast<int>(n) - 1, f))
                    throw Error("cell '" + c.id + "' references missing face '" + f + "'");
    return D;
}

ValidationReport validate(const DeltaComplex& D) {
    ValidationReport report;
    auto issue = [&](ValidationIssue::Kind k, std::string msg) {
        report.issues.push_back({k, std::move(msg)});
    };
    for (int n = 1; n <= D.dim(); ++n) {
        for (const auto& c : D.cells[n]) {
            for (int i = 0; i <= n; ++i) {
                const DeltaCell& f = D.at(n - 1, c.faces[i]);
                std::vector<Label> expected = c.flag;
                expected.erase(expected.begin() + i);
                if (f.flag != expected)
                    issue(ValidationIssue::Kind::flag_mismatch,
                          "flag of face d_" + std::to_string(i) + " of cell '" + c.id +
                              "' disagrees with the cell's flag");
            }
            if (n < 2) continue;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const std::string& left = D.at(n - 1, c.faces[j]).faces[i];
                    const std::string& right = D.at(n - 1, c.faces[i]).faces[j - 1];
                    if (left != right)
                        issue(ValidationIssue::Kind::face_identity,
                              "cell '" + c.id + "': d_" + std::to_string(i) + " d_" +
                                  std::to_string(j) + " = '" + left + "' but d_" +
                                  std::to_string(j - 1) + " d_" + std::to_string(i) + " = '" +
                                  right + "'");
                }
        }
    }
    // Precursor walk. Faces strictly decrease dimension, so a cycle cannot
    // occur in this representation; the walk is kept as a defensive check.
    std::set<std::pair<int, std::string>> on_stack, done;
    std::function<void(int, const std::string&)> walk = [&](int n, const std::string& id) {
        auto key = std::make_pair(n, id);
        if (done.count(key)) return;
        if (!on_stack.insert(key).second) {
            issue(ValidationIssue::Kind::precursor_cycle,
                  "cell '" + id + "' is its own precursor");
            return;
        }
        for (const auto& f : D.at(n, id).faces) walk(n - 1, f);
        on_stack.erase(key);
        done.insert(key);
    };
    for (int n = 0; n <= D.dim(); ++n)
        for (const auto& c : D.cells[n]) walk(n, c.id);
    return report;
}

void require_valid(const DeltaComplex& D) {
    ValidationReport report = validate(D);
    if (report.ok()) return;
    const ValidationIssue& first = report.issues.front();
    switch (first.kind) {
        case ValidationIssue::Kind::face_identity: throw FaceIdentityViolation(first.message);
        case ValidationIssue::Kind::flag_mismatch: throw FlagMismatch(first.message);
        case ValidationIssue::Kind::precursor_cycle: throw PrecursorCycle(first.message);
    }
}

namespace {

using Mask = unsigned;

std::string mask_text(Mask m) {
    std::string out;
    for (int i = 0; m >> i; ++i) {
        if (!(m & (Mask(1) << i))) continue;
        if (!out.empty()) out += ".";
        out += std::to_string(i);
    }
    return out;
}

// id of the canonical sd cell (carrier, chain); a 0-cell carrier keeps its
// bare id so the original vertices persist by name.
std::string sd_id(const DeltaCell& carrier, int carrier_dim, const std::vector<Mask>& chain) {
    if (carrier_dim == 0) return carrier.id;
    std::string out = carrier.id + "!";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += ";";
        out += mask_text(chain[i]);
    }
    return out;
}

int top_index(Mask m) {
    int t = -1;
    for (int i = 0; m >> i; ++i)
        if (m & (Mask(1) << i)) t = i;
    return t;
}

}  // namespace

DeltaComplex delta_sd(const DeltaComplex& D) {
    {
        ValidationReport report = validate(D);
        if (!report.ok()) throw InvalidComplex(report.issues.front().message);
    }
    std::vector<std::vector<DeltaCell>> out(static_cast<std::size_t>(D.dim() + 1));

    // Canonicalization: the top subset of a chain is pushed to the face of
    // the carrier it spans, so every cell is stored with S_n = full index
    // set. d_i for i < n just drops S_i; d_n drops the top and then pushes
    // the remaining chain into the spanned face, re-indexing the subsets.
    auto canonical_face_id = [&](const DeltaCell& carrier, int carrier_dim,
                                 std::vector<Mask> chain) {
        Mask top = chain.back();
        const DeltaCell* c = &carrier;
        int d = carrier_dim;
        for (int k = d; k >= 0; --k) {
            if (top & (Mask(1) << k)) continue;
            c = &D.at(d - 1, c->faces[k]);
            --d;
        }
        std::vector<int> rank(carrier_dim + 1, 0);
        for (int v = 0, r = 0; v <= carrier_dim; ++v)
            if (top & (Mask(1) << v)) rank[v] = r++;
        for (Mask& m : chain) {
            Mask re = 0;
            for (int v = 0; v <= carrier_dim; ++v)
                if (m & (Mask(1) << v)) re |= Mask(1) << rank[v];
            m = re;
        }
        return sd_id(*c, d, chain);
    };

    for (int cd = 0; cd <= D.dim(); ++cd) {
        const Mask full = (Mask(1) << (cd + 1)) - 1;
        for (const auto& carrier : D.cells[cd]) {
            // descending enumeration of chains S_0 < ... < S_n = full
            std::vector<Mask> chain;
            std::function<void(Mask)> extend = [&](Mask s) {
                chain.push_back(s);
                std::vector<Mask> cell_chain(chain.rbegin(), chain.rend());
                const int n = static_cast<int>(cell_chain.size()) - 1;
                DeltaCell cell;
                cell.id = sd_id(carrier, cd, cell_chain);
                for (int i = 0; i <= n; ++i)
                    cell.flag.push_back(carrier.flag[top_index(cell_chain[i])]);
                if (n > 0) {
                    for (int i = 0; i < n; ++i) {
                        std::vector<Mask> sub = cell_chain;
                        sub.erase(sub.begin() + i);
                        cell.faces.push_back(sd_id(carrier, cd, sub));
                    }
                    std::vector<Mask> sub = cell_chain;
                    sub.pop_back();
                    cell.faces.push_back(canonical_face_id(carrier, cd, std::move(sub)));
                }
                out[n].push_back(std::move(cell));
                for (Mask t = s - 1; t > 0; --t)
                    if ((t & s) == t) extend(t);
                chain.pop_back();
            };
            extend(full);
        }
    }
    for (auto& layer : out)
        std::sort(layer.begin(), layer.end(),
                  [](const DeltaCell& a, const DeltaCell& b) { return a.id < b.id; });
    return make_delta_complex(D.poset, std::move(out));
}

std::vector<std::string> cell_vertices(const DeltaComplex& D, int dim, const std::string& id) {
    std::vector<std::string> verts;
    for (int j = 0; j <= dim; ++j) {
        const DeltaCell* c = &D.at(dim, id);
        for (int k = dim; k > j; --k) c = &D.at(k - 1, c->faces[k]);
        for (int k = j; k > 0; --k) c = &D.at(k - 1, c->faces[0]);
        verts.push_back(c->id);
    }
    return verts;
}

StratComplex to_strat_complex(const DeltaComplex& D) {
    {
        ValidationReport report = validate(D);
        if (!report.ok()) throw InvalidComplex(report.issues.front().message);
    }
    std::map<Vertex, Label> labels;
    if (D.dim() >= 0)
        for (const auto& v : D.cells[0]) labels[v.id] = v.flag[0];
    std::set<Simplex> simplices;
    for (int n = 0; n <= D.dim(); ++n) {
        std::map<Simplex, std::string> seen;
        for (const auto& c : D.cells[n]) {
            std::vector<std::string> verts = cell_vertices(D, n, c.id);
            Simplex s(verts.begin(), verts.end());
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw NotSimplicial("cell '" + c.id + "' has a repeated vertex");
            auto [it, fresh] = seen.emplace(s, c.id);
            if (!fresh)
                throw NotSimplicial("cells '" + it->second + "' and '" + c.id +
                                    "' span the same vertex set");
            simplices.insert(std::move(s));
        }
    }
    return make_complex(D.poset, std::move(labels), std::move(simplices));
}

}  // namespace strathol
