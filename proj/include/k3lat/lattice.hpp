#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/linalg.hpp"

namespace k3lat {

// Even nondegenerate lattice given by its Gram matrix. Invariants are
// computed once at construction; values are immutable afterwards.
class Lattice {
public:
    // Validates symmetry, nondegeneracy and evenness.
    explicit Lattice(IntMatrix gram, std::string label = "");

    static Lattice zero() { return Lattice(IntMatrix(0, 0), "0"); }

    const IntMatrix& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    int rank() const { return gram_.rows(); }
    const Int& determinant() const { return det_; }
    const Signature& signature() const { return sig_; }

    bool is_unimodular() const { return det_ == 1 || det_ == -1; }
    bool is_hyperbolic() const { return sig_.t_plus == 1 && sig_.t_minus == rank() - 1; }
    bool is_negative_definite() const { return sig_.t_plus == 0; }
    bool is_positive_definite() const { return sig_.t_minus == 0; }

    // Gram matrix of the dual lattice in the dual basis.
    RatMatrix dual_gram() const;

    Lattice with_label(std::string label) const;

    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

private:
    IntMatrix gram_;
    std::string label_;
    Int det_;
    Signature sig_;
};

namespace lattices {

// Root lattices in the negative definite convention: diagonal -2,
// Dynkin-adjacent off-diagonal +1. Node numbering: A_n is the path
// 1-2-...-n; D_n is the path 1-...-(n-1) with node n attached to n-2;
// E_n (n=6,7,8) is the path 1-3-4-5-...-n with node 2 attached to 4.
Lattice A(int n);
Lattice D(int n);
Lattice E(int n);

// Hyperbolic plane [[0,1],[1,0]].
Lattice U();

// <a> of rank one; a must be even and nonzero.
Lattice rank1(const Int& a);

// Diagonal lattice <a_1,...,a_k>; entries even and nonzero.
Lattice diagonal(const IntVec& entries);

// Arbitrary even nondegenerate Gram matrix.
Lattice from_gram(const IntMatrix& gram, std::string label = "");

// 3U + 2E8, the K3 lattice.
Lattice k3();

}  // namespace lattices

// Bilinear form scaled by t; result must stay integral (and even).
Lattice rescale(const Lattice& l, const Rat& t);

Lattice direct_sum(const std::vector<Lattice>& parts);

struct LatticeInvariants {
    int rank;
    Signature signature;
    Int determinant;
    bool is_even;
    bool is_unimodular;
    bool is_hyperbolic;
};

LatticeInvariants invariants(const Lattice& l);

}  // namespace k3lat
