#pragma once

#include <optional>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Canonical representative of a rational in Q/2Z, in [0,2).
Rat mod2(const Rat& x);
// Canonical representative in Q/Z, in [0,1).
Rat mod1(const Rat& x);

// Finite quadratic form q: A -> Q/2Z on a finite abelian group A given in
// invariant-factor presentation A = Z/d_1 + ... + Z/d_k, d_1 | d_2 | ...,
// together with the associated bilinear form b: A x A -> Q/Z.
class FiniteQuadraticForm {
public:
    // Trivial form on the trivial group.
    FiniteQuadraticForm();

    // Validates the chain, value constraints and nondegeneracy of b.
    FiniteQuadraticForm(IntVec orders, std::vector<Rat> q_values, RatMatrix b_values);

    int gens() const { return static_cast<int>(orders_.size()); }
    const IntVec& orders() const { return orders_; }
    const Rat& q_value(int i) const { return q_[i]; }
    const Rat& b_value(int i, int j) const { return b_(i, j); }
    Int group_order() const;
    bool is_trivial() const { return orders_.empty(); }

    // q and b evaluated on arbitrary integer coefficient vectors.
    Rat eval_q(const IntVec& coeffs) const;
    Rat eval_b(const IntVec& x, const IntVec& y) const;

    // Order of the element with the given coefficients.
    Int element_order(const IntVec& coeffs) const;

    bool operator==(const FiniteQuadraticForm& o) const;

    std::string str() const;

private:
    IntVec orders_;
    std::vector<Rat> q_;
    RatMatrix b_;

    void validate() const;
};

// Discriminant form q_L on A_L = L*/L of an even lattice.
FiniteQuadraticForm discriminant_form(const Lattice& l);

FiniteQuadraticForm negate(const FiniteQuadraticForm& q);

// Orthogonal sum, re-presented with a canonical invariant-factor chain.
FiniteQuadraticForm direct_sum_q(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

// Restriction to the p-Sylow subgroup.
FiniteQuadraticForm p_primary_part(const FiniteQuadraticForm& q, const Int& p);

// Primes dividing |A|, ascending.
std::vector<Int> support_primes(const FiniteQuadraticForm& q);

// Minimal number of generators of A (invariant factors > 1).
int min_generators(const FiniteQuadraticForm& q);

inline constexpr long kDefaultGaussBound = 1L << 20;

// The s in sum_x exp(pi*i*q(x)) = sqrt(|A|) * exp(2*pi*i*s/8), i.e. the
// Milgram signature of q mod 8. Brute-force sum over the group; throws if
// |A| exceeds the bound or the sum does not snap to an eighth root.
int gauss_signature(const FiniteQuadraticForm& q, long bound = kDefaultGaussBound);
int gauss_signature_serial(const FiniteQuadraticForm& q, long bound = kDefaultGaussBound);

// Ground-truth isomorphism test by exhaustive search over generator images.
// Only for small groups (|A| <= bound).
bool brute_force_iso(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long bound = 128);

// Test-support constructors for standard blocks at scale p^k.
namespace blocks {
// <theta/2^k> on Z/2^k (theta odd), or <a/p^k> on Z/p^k for odd p.
FiniteQuadraticForm w_block(const Int& p, int k, const Int& num);
// U-block at scale 2^k: q(x)=q(y)=0, b(x,y)=1/2^k.
FiniteQuadraticForm u_block(int k);
// V-block at scale 2^k: q(x)=q(y)=2/2^k, b(x,y)=1/2^k.
FiniteQuadraticForm v_block(int k);
}  // namespace blocks

}  // namespace k3lat
