#include "strathol/homology.hpp"

#include <algorithm>
#include <set>

namespace strathol {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

}  // namespace

ChainComplexZ chain_complex(const StratComplex& K) {
    ChainComplexZ cc;
    const int d = K.dim();
    if (d < 0) return cc;
    cc.basis.resize(d + 1);
    for (const auto& s : K.simplices) cc.basis[s.size() - 1].push_back(s);
    std::vector<std::map<Simplex, int>> index(d + 1);
    for (int n = 0; n <= d; ++n)
        for (int j = 0; j < static_cast<int>(cc.basis[n].size()); ++j)
            index[n].emplace(cc.basis[n][j], j);
    cc.boundary.resize(d + 1);
    cc.boundary[0].resize(cc.basis[0].size());  // zero map
    for (int n = 1; n <= d; ++n) {
        cc.boundary[n].resize(cc.basis[n].size());
        for (std::size_t j = 0; j < cc.basis[n].size(); ++j) {
            const Simplex& s = cc.basis[n][j];
            int sign = 1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                facet.reserve(s.size() - 1);
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) facet.push_back(s[k]);
                cc.boundary[n][j].emplace(index[n - 1].at(facet), sign);
                sign = -sign;
            }
        }
    }
    return cc;
}

Coeff Coeff::Fp(Int prime) {
    if (prime < 2) throw Error("modulus must be a prime, got " + prime.str());
    if (prime > Int(1) << 31) throw Error("modulus too large");
    for (Int t = 2; t * t <= prime; ++t)
        if (prime % t == 0) throw Error("modulus " + prime.str() + " is not prime");
    return {Kind::mod_p, std::move(prime)};
}

long long BettiTable::euler() const {
    long long chi = 0;
    int sign = 1;
    for (std::size_t b : betti) {
        chi += sign * static_cast<long long>(b);
        sign = -sign;
    }
    return chi;
}

BettiTable normalized(BettiTable t) {
    while (!t.betti.empty() && t.betti.back() == 0 &&
           (t.torsion.size() < t.betti.size() || t.torsion[t.betti.size() - 1].empty())) {
        t.betti.pop_back();
        if (t.torsion.size() > t.betti.size()) t.torsion.resize(t.betti.size());
    }
    t.torsion.resize(t.betti.size());
    return t;
}

namespace {

// Sparse integer matrix with row occupancy tracking, for the unit-pivot
// elimination phase of the Smith normal form.
struct SparseWork {
    std::vector<std::map<int, Int>> cols;
    std::vector<std::set<int>> rows;

    SparseWork(int nrows, std::vector<std::map<int, Int>> c)
        : cols(std::move(c)), rows(nrows) {
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (const auto& [i, v] : cols[j]) {
                (void)v;
                rows[i].insert(j);
            }
    }

    void set_entry(int j, int i, Int v) {
        auto it = cols[j].find(i);
        if (v == 0) {
            if (it != cols[j].end()) {
                cols[j].erase(it);
                rows[i].erase(j);
            }
        } else if (it == cols[j].end()) {
            cols[j].emplace(i, std::move(v));
            rows[i].insert(j);
        } else {
            it->second = std::move(v);
        }
    }

    // best unit pivot by Markowitz fill score
    bool find_unit(int& pr, int& pc) const {
        std::size_t best = SIZE_MAX;
        pr = pc = -1;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (const auto& [i, v] : cols[j]) {
                if (v != 1 && v != -1) continue;
                std::size_t score = (cols[j].size() - 1) * (rows[i].size() - 1);
                if (score < best) {
                    best = score;
                    pr = i;
                    pc = j;
                    if (best == 0) return true;
                }
            }
        return pc >= 0;
    }

    // Clear column pc with row operations against the unit pivot at
    // (pr, pc), then drop the pivot row and column. The column operations
    // that would finish the pivot row touch only that row, so dropping is
    // exact for the remaining submatrix.
    void eliminate_unit(int pr, int pc) {
        const Int v = cols[pc].at(pr);
        std::vector<std::pair<int, Int>> targets;
        for (const auto& [i, w] : cols[pc])
            if (i != pr) targets.emplace_back(i, v == 1 ? w : Int(-w));
        const std::vector<int> jcols(rows[pr].begin(), rows[pr].end());
        for (int j : jcols) {
            if (j == pc) continue;
            const Int a = cols[j].at(pr);
            for (const auto& [i, f] : targets) {
                auto it = cols[j].find(i);
                Int cur = it == cols[j].end() ? Int(0) : it->second;
                set_entry(j, i, cur - f * a);
            }
            cols[j].erase(pr);
        }
        for (const auto& [i, w] : cols[pc]) {
            (void)w;
            if (i != pr) rows[i].erase(pc);
        }
        cols[pc].clear();
        rows[pr].clear();
    }
};

// classic Smith reduction on the (small) residual left by the unit phase
std::vector<Int> dense_snf_diagonal(std::vector<std::vector<Int>> M) {
    std::vector<Int> diag;
    if (M.empty() || M[0].empty()) return diag;
    const int R = static_cast<int>(M.size()), C = static_cast<int>(M[0].size());
    for (int t = 0;; ++t) {
        int pr = -1, pc = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (M[i][j] != 0 && (pr < 0 || abs(M[i][j]) < abs(M[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(M[pr], M[t]);
        for (int i = 0; i < R; ++i) std::swap(M[i][pc], M[i][t]);
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < R && !again; ++i) {
                if (M[i][t] == 0) continue;
                Int q = M[i][t] / M[t][t];
                if (q != 0)
                    for (int j = t; j < C; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(M[i], M[t]);
                    again = true;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < C && !again; ++j) {
                if (M[t][j] == 0) continue;
                Int q = M[t][j] / M[t][t];
                if (q != 0)
                    for (int i = t; i < R; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) {
                    for (int i = t; i < R; ++i) std::swap(M[i][j], M[i][t]);
                    again = true;
                }
            }
            if (again) continue;
            for (int i = t + 1; i < R && !again; ++i)
                for (int j = t + 1; j < C && !again; ++j)
                    if (M[i][j] % M[t][t] != 0) {  // pull the row up to fix divisibility
                        for (int jj = t; jj < C; ++jj) M[t][jj] += M[i][jj];
                        again = true;
                    }
        }
        diag.push_back(abs(M[t][t]));
        if (t + 1 >= R || t + 1 >= C) {
            // submatrix exhausted; remaining scan ranges are empty
        }
    }
    return diag;
}

void fold_divisibility(std::vector<Int>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (d[j] % d[i] != 0) {
                    Int g = gcd(d[i], d[j]);
                    Int l = d[i] / g * d[j];
                    d[i] = std::move(g);
                    d[j] = std::move(l);
                    changed = true;
                }
    }
    std::sort(d.begin(), d.end());
}

struct RatField {
    using V = Rat;
    static bool is_zero(const V& v) { return v == 0; }
    static V ratio(const V& a, const V& b) { return a / b; }
    static V fused(const V& cur, const V& f, const V& a) { return cur - f * a; }
};

struct ModField {
    Int p;
    using V = Int;
    bool is_zero(const V& v) const { return v == 0; }
    V norm(Int v) const {
        v %= p;
        if (v < 0) v += p;
        return v;
    }
    V inverse(const V& a) const {
        Int t = 0, newt = 1, r = p, newr = norm(a);
        while (newr != 0) {
            Int q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (r != 1) throw Error("entry not invertible modulo " + p.str());
        return norm(t);
    }
    V ratio(const V& a, const V& b) const { return norm(a * inverse(b)); }
    V fused(const V& cur, const V& f, const V& a) const { return norm(cur - f * a); }
};

template <class F>
std::size_t field_rank(int nrows, std::vector<std::map<int, typename F::V>> cols, const F& field) {
    using V = typename F::V;
    std::vector<std::set<int>> rows(nrows);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [i, v] : cols[j]) {
            (void)v;
            rows[i].insert(j);
        }
    std::size_t rank = 0;
    for (;;) {
        int pc = -1;
        std::size_t bestc = SIZE_MAX;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            if (!cols[j].empty() && cols[j].size() < bestc) {
                bestc = cols[j].size();
                pc = j;
            }
        if (pc < 0) break;
        int pr = -1;
        std::size_t bestr = SIZE_MAX;
        for (const auto& [i, v] : cols[pc]) {
            (void)v;
            if (rows[i].size() < bestr) {
                bestr = rows[i].size();
                pr = i;
            }
        }
        const V pivot = cols[pc].at(pr);
        std::vector<std::pair<int, V>> targets;
        for (const auto& [i, w] : cols[pc])
            if (i != pr) targets.emplace_back(i, field.ratio(w, pivot));
        const std::vector<int> jcols(rows[pr].begin(), rows[pr].end());
        for (int j : jcols) {
            if (j == pc) continue;
            const V a = cols[j].at(pr);
            for (const auto& [i, f] : targets) {
                auto it = cols[j].find(i);
                V cur = it == cols[j].end() ? V(0) : it->second;
                V nv = field.fused(cur, f, a);
                if (field.is_zero(nv)) {
                    if (it != cols[j].end()) {
                        cols[j].erase(it);
                        rows[i].erase(j);
                    }
                } else if (it == cols[j].end()) {
                    cols[j].emplace(i, std::move(nv));
                    rows[i].insert(j);
                } else {
                    it->second = std::move(nv);
                }
            }
            cols[j].erase(pr);
        }
        for (const auto& [i, w] : cols[pc]) {
            (void)w;
            if (i != pr) rows[i].erase(pc);
        }
        cols[pc].clear();
        rows[pr].clear();
        ++rank;
    }
    return rank;
}

}  // namespace

SnfResult smith_normal_form(int nrows, std::vector<std::map<int, Int>> cols) {
    SparseWork work(nrows, std::move(cols));
    std::vector<Int> diag;
    int pr, pc;
    while (work.find_unit(pr, pc)) {
        work.eliminate_unit(pr, pc);
        diag.emplace_back(1);
    }
    std::vector<int> live_cols;
    std::set<int> live_rows_set;
    for (int j = 0; j < static_cast<int>(work.cols.size()); ++j)
        if (!work.cols[j].empty()) {
            live_cols.push_back(j);
            for (const auto& [i, v] : work.cols[j]) {
                (void)v;
                live_rows_set.insert(i);
            }
        }
    if (!live_cols.empty()) {
        std::vector<int> live_rows(live_rows_set.begin(), live_rows_set.end());
        std::map<int, int> row_pos;
        for (int k = 0; k < static_cast<int>(live_rows.size()); ++k) row_pos[live_rows[k]] = k;
        std::vector<std::vector<Int>> M(live_rows.size(), std::vector<Int>(live_cols.size(), 0));
        for (int k = 0; k < static_cast<int>(live_cols.size()); ++k)
            for (const auto& [i, v] : work.cols[live_cols[k]]) M[row_pos[i]][k] = v;
        for (Int& e : dense_snf_diagonal(std::move(M))) diag.push_back(std::move(e));
    }
    fold_divisibility(diag);
    SnfResult out;
    out.rank = diag.size();
    out.diagonal = std::move(diag);
    return out;
}

BettiTable homology(const StratComplex& K, const Coeff& coeff) {
    ChainComplexZ cc = chain_complex(K);
    const int d = static_cast<int>(cc.basis.size()) - 1;
    BettiTable table;
    if (d < 0) return table;
    std::vector<std::size_t> rank(d + 2, 0);
    table.torsion.assign(d + 1, {});
    for (int n = 1; n <= d; ++n) {
        const int nrows = static_cast<int>(cc.basis[n - 1].size());
        if (coeff.kind == Coeff::Kind::integers) {
            SnfResult snf = smith_normal_form(nrows, cc.boundary[n]);
            rank[n] = snf.rank;
            for (const Int& e : snf.diagonal)
                if (e > 1) table.torsion[n - 1].push_back(e);
        } else if (coeff.kind == Coeff::Kind::rationals) {
            std::vector<std::map<int, Rat>> cols(cc.boundary[n].size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (const auto& [i, v] : cc.boundary[n][j]) cols[j].emplace(i, Rat(v));
            rank[n] = field_rank(nrows, std::move(cols), RatField{});
        } else {
            ModField field{coeff.p};
            std::vector<std::map<int, Int>> cols(cc.boundary[n].size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (const auto& [i, v] : cc.boundary[n][j]) {
                    Int e = field.norm(v);
                    if (e != 0) cols[j].emplace(i, std::move(e));
                }
            rank[n] = field_rank(nrows, std::move(cols), field);
        }
    }
    for (int n = 0; n <= d; ++n)
        table.betti.push_back(cc.basis[n].size() - rank[n] - rank[n + 1]);
    return table;
}

long long euler_characteristic(const StratComplex& K) { return K.euler(); }

RationalHomology::RationalHomology(const StratComplex& K) : cc_(chain_complex(K)) {
    const int d = static_cast<int>(cc_.basis.size()) - 1;
    index_.resize(d + 1);
    boundary_low_.resize(d + 1);
    h_low_.resize(d + 1);
    h_basis_.resize(d + 1);
    h_order_.resize(d + 1);
    for (int n = 0; n <= d; ++n)
        for (int j = 0; j < static_cast<int>(cc_.basis[n].size()); ++j)
            index_[n].emplace(cc_.basis[n][j], j);

    // boundary reducers for B_n, from the columns of d_{n+1}
    for (int n = 0; n < d; ++n) {
        for (const auto& int_col : cc_.boundary[n + 1]) {
            std::map<int, Rat> col;
            for (const auto& [i, v] : int_col) col.emplace(i, Rat(v));
            while (!col.empty()) {
                const int low = col.rbegin()->first;
                auto hit = boundary_low_[n].find(low);
                if (hit == boundary_low_[n].end()) break;
                const Rat f = col.rbegin()->second;  // reducer is normalized to 1 at low
                for (const auto& [i, v] : hit->second) {
                    auto it = col.find(i);
                    Rat nv = (it == col.end() ? Rat(0) : it->second) - f * v;
                    if (nv == 0) {
                        if (it != col.end()) col.erase(it);
                    } else if (it == col.end()) {
                        col.emplace(i, std::move(nv));
                    } else {
                        it->second = std::move(nv);
                    }
                }
            }
            if (col.empty()) continue;
            const int low = col.rbegin()->first;
            const Rat lead = col.rbegin()->second;
            for (auto& [i, v] : col) v /= lead;
            boundary_low_[n].emplace(low, std::move(col));
        }
    }

    // kernels of d_n via column reduction with a combination tracker, then
    // reduction of each kernel cycle against the boundaries and the
    // homology vectors found so far
    for (int n = 0; n <= d; ++n) {
        std::map<int, std::pair<std::map<int, Rat>, int>> low_owner;  // low -> (column, owner)
        std::vector<std::map<int, Rat>> tracker(cc_.basis[n].size());
        for (int j = 0; j < static_cast<int>(cc_.basis[n].size()); ++j) {
            std::map<int, Rat> col;
            for (const auto& [i, v] : cc_.boundary[n][j]) col.emplace(i, Rat(v));
            std::map<int, Rat> comb{{j, Rat(1)}};
            while (!col.empty()) {
                const int low = col.rbegin()->first;
                auto hit = low_owner.find(low);
                if (hit == low_owner.end()) break;
                const Rat f = col.rbegin()->second / hit->second.first.rbegin()->second;
                for (const auto& [i, v] : hit->second.first) {
                    auto it = col.find(i);
                    Rat nv = (it == col.end() ? Rat(0) : it->second) - f * v;
                    if (nv == 0) {
                        if (it != col.end()) col.erase(it);
                    } else if (it == col.end()) {
                        col.emplace(i, std::move(nv));
                    } else {
                        it->second = std::move(nv);
                    }
                }
                for (const auto& [i, v] : tracker[hit->second.second]) {
                    auto it = comb.find(i);
                    Rat nv = (it == comb.end() ? Rat(0) : it->second) - f * v;
                    if (nv == 0) {
                        if (it != comb.end()) comb.erase(it);
                    } else if (it == comb.end()) {
                        comb.emplace(i, std::move(nv));
                    } else {
                        it->second = std::move(nv);
                    }
                }
            }
            if (!col.empty()) {
                const int low = col.rbegin()->first;
                low_owner.emplace(low, std::make_pair(std::move(col), j));
                tracker[j] = std::move(comb);
                continue;
            }
            // comb is a cycle; reduce modulo boundaries and known homology
            std::map<int, Rat>& z = comb;
            while (!z.empty()) {
                const int low = z.rbegin()->first;
                const Rat c = z.rbegin()->second;
                const std::map<int, Rat>* reducer = nullptr;
                auto bit = boundary_low_[n].find(low);
                if (bit != boundary_low_[n].end()) {
                    reducer = &bit->second;
                } else {
                    auto hit = h_low_[n].find(low);
                    if (hit != h_low_[n].end()) reducer = &hit->second;
                }
                if (!reducer) break;
                for (const auto& [i, v] : *reducer) {
                    auto it = z.find(i);
                    Rat nv = (it == z.end() ? Rat(0) : it->second) - c * v;
                    if (nv == 0) {
                        if (it != z.end()) z.erase(it);
                    } else if (it == z.end()) {
                        z.emplace(i, std::move(nv));
                    } else {
                        it->second = std::move(nv);
                    }
                }
            }
            if (z.empty()) continue;
            const Rat lead = z.rbegin()->second;
            for (auto& [i, v] : z) v /= lead;
            const int low = z.rbegin()->first;
            h_order_[n].emplace(low, h_basis_[n].size());
            h_low_[n].emplace(low, z);
            h_basis_[n].push_back(std::move(z));
        }
    }
}

std::size_t RationalHomology::betti(int n) const {
    if (n < 0 || n >= static_cast<int>(h_basis_.size())) return 0;
    return h_basis_[n].size();
}

const std::vector<std::map<int, Rat>>& RationalHomology::basis(int n) const {
    static const std::vector<std::map<int, Rat>> empty;
    if (n < 0 || n >= static_cast<int>(h_basis_.size())) return empty;
    return h_basis_[n];
}

const std::vector<Simplex>& RationalHomology::simplex_basis(int n) const {
    static const std::vector<Simplex> empty;
    if (n < 0 || n >= static_cast<int>(cc_.basis.size())) return empty;
    return cc_.basis[n];
}

int RationalHomology::simplex_index(int n, const Simplex& s) const {
    if (n < 0 || n >= static_cast<int>(index_.size())) return -1;
    auto it = index_[n].find(s);
    return it == index_[n].end() ? -1 : it->second;
}

std::vector<Rat> RationalHomology::express(int n, std::map<int, Rat> cycle) const {
    std::vector<Rat> coeffs(betti(n), Rat(0));
    if (cycle.empty()) return coeffs;
    if (n < 0 || n >= static_cast<int>(h_basis_.size()))
        throw Error("chain dimension out of range");
    while (!cycle.empty()) {
        const int low = cycle.rbegin()->first;
        const Rat c = cycle.rbegin()->second;
        const std::map<int, Rat>* reducer = nullptr;
        auto bit = boundary_low_[n].find(low);
        if (bit != boundary_low_[n].end()) {
            reducer = &bit->second;
        } else {
            auto hit = h_low_[n].find(low);
            if (hit != h_low_[n].end()) {
                coeffs[h_order_[n].at(low)] += c;
                reducer = &hit->second;
            }
        }
        if (!reducer) throw Error("chain is not a cycle of the complex");
        for (const auto& [i, v] : *reducer) {
            auto it = cycle.find(i);
            Rat nv = (it == cycle.end() ? Rat(0) : it->second) - c * v;
            if (nv == 0) {
                if (it != cycle.end()) cycle.erase(it);
            } else if (it == cycle.end()) {
                cycle.emplace(i, std::move(nv));
            } else {
                it->second = std::move(nv);
            }
        }
    }
    return coeffs;
}

namespace {

std::vector<std::vector<Rat>> induced_matrix(const RationalHomology& src,
                                             const RationalHomology& dst, int n) {
    std::vector<std::vector<Rat>> M(dst.betti(n), std::vector<Rat>(src.betti(n), Rat(0)));
    for (std::size_t c = 0; c < src.basis(n).size(); ++c) {
        std::map<int, Rat> z;
        for (const auto& [idx, val] : src.basis(n)[c]) {
            int di = dst.simplex_index(n, src.simplex_basis(n)[idx]);
            if (di < 0) throw Error("subcomplex simplex missing from the ambient complex");
            z.emplace(di, val);
        }
        std::vector<Rat> coeffs = dst.express(n, std::move(z));
        for (std::size_t r = 0; r < coeffs.size(); ++r) M[r][c] = std::move(coeffs[r]);
    }
    return M;
}

std::size_t dense_rank_q(std::vector<std::vector<Rat>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t R = M.size(), C = M[0].size();
    std::size_t rank = 0;
    for (std::size_t j = 0; j < C && rank < R; ++j) {
        std::size_t pivot = rank;
        while (pivot < R && M[pivot][j] == 0) ++pivot;
        if (pivot == R) continue;
        std::swap(M[pivot], M[rank]);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == rank || M[i][j] == 0) continue;
            Rat f = M[i][j] / M[rank][j];
            for (std::size_t k = j; k < C; ++k) M[i][k] -= f * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

void require_closed_inside(const std::set<Simplex>& simplices, const StratComplex& Y,
                           const std::string& name) {
    for (const auto& s : simplices) {
        if (!Y.contains(s))
            throw DecompositionInvalid(name + " contains a simplex outside the ambient complex");
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) facet.push_back(s[k]);
                if (!simplices.count(facet))
                    throw DecompositionInvalid(name + " is not face-closed");
            }
    }
}

long long euler_of_set(const std::set<Simplex>& simplices) {
    long long chi = 0;
    for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

}  // namespace

std::vector<std::vector<Rat>> induced_map_rational(const Subcomplex& L, int dim) {
    for (const auto& s : L.simplices) {
        if (!L.parent.contains(s))
            throw NotSubcomplex("simplex outside the ambient complex");
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) facet.push_back(s[k]);
                if (!L.simplices.count(facet)) throw NotSubcomplex("subcomplex is not face-closed");
            }
    }
    RationalHomology src(L.carrier());
    RationalHomology dst(L.parent);
    return induced_matrix(src, dst, dim);
}

MVReport mayer_vietoris_check(const StratComplex& Y, const Subcomplex& X, const Subcomplex& B,
                              const Subcomplex& A) {
    require_closed_inside(X.simplices, Y, "the first piece");
    require_closed_inside(B.simplices, Y, "the second piece");
    require_closed_inside(A.simplices, Y, "the intersection piece");
    for (const auto& s : Y.simplices)
        if (!X.simplices.count(s) && !B.simplices.count(s))
            throw DecompositionInvalid("the pieces do not cover the ambient complex");
    for (const auto& s : X.simplices) {
        const bool in_b = B.simplices.count(s) != 0;
        if (in_b != (A.simplices.count(s) != 0))
            throw DecompositionInvalid("the declared intersection is not the actual intersection");
    }
    for (const auto& s : A.simplices)
        if (!X.simplices.count(s) || !B.simplices.count(s))
            throw DecompositionInvalid("the declared intersection is not the actual intersection");

    MVReport report;
    RationalHomology HA(Subcomplex{Y, A.simplices}.carrier());
    RationalHomology HX(Subcomplex{Y, X.simplices}.carrier());
    RationalHomology HB(Subcomplex{Y, B.simplices}.carrier());
    RationalHomology HY(Y);
    const int N = std::max(std::max(HA.top_dim(), HY.top_dim()),
                           std::max(HX.top_dim(), HB.top_dim()));
    for (int n = 0; n <= N; ++n) {
        report.betti_a.push_back(HA.betti(n));
        report.betti_x.push_back(HX.betti(n));
        report.betti_b.push_back(HB.betti(n));
        report.betti_y.push_back(HY.betti(n));
    }
    auto fail = [&](int n, std::string what) {
        report.pass = false;
        report.offending_dim = n;
        report.detail = std::move(what);
        return report;
    };

    if (euler_of_set(X.simplices) + euler_of_set(B.simplices) - euler_of_set(A.simplices) !=
        Y.euler())
        return fail(-1, "Euler characteristics do not add up");

    std::vector<std::size_t> r_alpha(N + 2, 0), r_beta(N + 2, 0);
    for (int n = 0; n <= N; ++n) {
        const std::size_t bA = HA.betti(n), bX = HX.betti(n), bB = HB.betti(n),
                          bY = HY.betti(n);
        auto ax = induced_matrix(HA, HX, n);
        auto ab = induced_matrix(HA, HB, n);
        auto xy = induced_matrix(HX, HY, n);
        auto by = induced_matrix(HB, HY, n);
        std::vector<std::vector<Rat>> alpha(bX + bB, std::vector<Rat>(bA, Rat(0)));
        for (std::size_t i = 0; i < bX; ++i)
            for (std::size_t j = 0; j < bA; ++j) alpha[i][j] = ax[i][j];
        for (std::size_t i = 0; i < bB; ++i)
            for (std::size_t j = 0; j < bA; ++j) alpha[bX + i][j] = -ab[i][j];
        std::vector<std::vector<Rat>> beta(bY, std::vector<Rat>(bX + bB, Rat(0)));
        for (std::size_t i = 0; i < bY; ++i) {
            for (std::size_t j = 0; j < bX; ++j) beta[i][j] = xy[i][j];
            for (std::size_t j = 0; j < bB; ++j) beta[i][bX + j] = by[i][j];
        }
        for (std::size_t i = 0; i < bY; ++i)
            for (std::size_t j = 0; j < bA; ++j) {
                Rat sum = 0;
                for (std::size_t k = 0; k < bX + bB; ++k) sum += beta[i][k] * alpha[k][j];
                if (sum != 0) return fail(n, "the two inclusion composites disagree");
            }
        r_alpha[n] = dense_rank_q(alpha);
        r_beta[n] = dense_rank_q(beta);
    }
    for (int n = 0; n <= N; ++n)
        if (r_alpha[n] != HX.betti(n) + HB.betti(n) - r_beta[n])
            return fail(n, "exactness fails at the middle term");
    for (int n = 1; n <= N + 1; ++n) {
        const std::size_t lhs = HY.betti(n) - r_beta[n];
        const std::size_t rhs = HA.betti(n - 1) - r_alpha[n - 1];
        if (lhs != rhs) return fail(n, "connecting ranks do not balance");
    }
    if (r_beta[0] != HY.betti(0)) return fail(0, "the pieces do not cover at the level of components");
    report.pass = true;
    report.offending_dim = -1;
    report.detail = "exact";
    return report;
}

}  // namespace strathol
