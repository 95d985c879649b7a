#pragma once

#include <map>
#include <string>
#include <vector>

#include "strathol/complex.hpp"
#include "strathol/rational.hpp"

namespace strathol {

// Simplicial chain complex over the integers. Bases are lexicographic on
// the sorted vertex lists; boundary columns carry the alternating signs.
struct ChainComplexZ {
    std::vector<std::vector<Simplex>> basis;                 // basis[n] = n-simplices
    std::vector<std::vector<std::map<int, Int>>> boundary;   // boundary[n][j]: column of d_n
};

ChainComplexZ chain_complex(const StratComplex& K);

struct Coeff {
    enum class Kind { integers, rationals, mod_p };
    Kind kind = Kind::integers;
    Int p = 0;

    static Coeff Z() { return {Kind::integers, 0}; }
    static Coeff Q() { return {Kind::rationals, 0}; }
    static Coeff Fp(Int prime);  // validates primality
};

struct BettiTable {
    std::vector<std::size_t> betti;
    std::vector<std::vector<Int>> torsion;  // per dimension, divisibility-ordered

    long long euler() const;
    bool operator==(const BettiTable& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

// strip trailing dimensions with Betti 0 and no torsion
BettiTable normalized(BettiTable t);

BettiTable homology(const StratComplex& K, const Coeff& coeff);

long long euler_characteristic(const StratComplex& K);

// Smith normal form of a sparse integer matrix (columns as row->value
// maps). diagonal holds the positive elementary divisors in divisibility
// order; rank is their count.
struct SnfResult {
    std::size_t rank = 0;
    std::vector<Int> diagonal;
};

SnfResult smith_normal_form(int nrows, std::vector<std::map<int, Int>> cols);

// Rational homology with cycle representatives, for induced maps.
class RationalHomology {
  public:
    explicit RationalHomology(const StratComplex& K);

    int top_dim() const { return static_cast<int>(h_basis_.size()) - 1; }
    std::size_t betti(int n) const;
    // homology basis: cycles as sparse vectors over the n-simplex basis
    const std::vector<std::map<int, Rat>>& basis(int n) const;
    const std::vector<Simplex>& simplex_basis(int n) const;
    int simplex_index(int n, const Simplex& s) const;  // -1 if absent
    // coordinates of a cycle in the homology basis (modulo boundaries)
    std::vector<Rat> express(int n, std::map<int, Rat> cycle) const;

  private:
    ChainComplexZ cc_;
    std::vector<std::map<Simplex, int>> index_;
    std::vector<std::map<int, std::map<int, Rat>>> boundary_low_;  // per dim: low -> reduced column
    std::vector<std::map<int, std::map<int, Rat>>> h_low_;         // per dim: low -> basis cycle
    std::vector<std::vector<std::map<int, Rat>>> h_basis_;
    std::vector<std::map<int, std::size_t>> h_order_;  // low -> position in h_basis_
};

// Matrix of H_dim(L; Q) -> H_dim(parent; Q), rows indexed by the parent's
// homology basis. Throws NotSubcomplex if L is not face-closed inside its
// parent.
std::vector<std::vector<Rat>> induced_map_rational(const Subcomplex& L, int dim);

// Mayer-Vietoris rank bookkeeping for Y covered by X and B with
// intersection A (exact simplex-set conditions). All homology rational.
struct MVReport {
    bool pass = false;
    int offending_dim = -1;
    std::string detail;
    std::vector<std::size_t> betti_a, betti_x, betti_b, betti_y;
};

MVReport mayer_vietoris_check(const StratComplex& Y, const Subcomplex& X, const Subcomplex& B,
                              const Subcomplex& A);

}  // namespace strathol
