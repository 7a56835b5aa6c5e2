#pragma once

#include "k3lat/matrix.hpp"

namespace k3lat {

struct SmithResult {
    IntMatrix u;  // unimodular, rows() x rows() of input
    IntMatrix d;  // diagonal, d(i,i) >= 0, d(i,i) | d(i+1,i+1)
    IntMatrix v;  // unimodular, cols() x cols() of input
};

// D = U * M * V with U, V unimodular and D in Smith normal form.
SmithResult smith_normal_form(const IntMatrix& m);

// Invariant factors > 1 of coker(M) read off the Smith form (ascending chain).
IntVec invariant_factors(const IntMatrix& m);

// All min(rows, cols) diagonal entries of the Smith form, including 1s and 0s.
IntVec smith_diagonal(const IntMatrix& m);

// Basis of the saturated kernel {x : Mx = 0}, one column per basis vector.
IntMatrix integer_kernel(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

struct Signature {
    int t_plus = 0;
    int t_minus = 0;
    bool operator==(const Signature&) const = default;
};

// Sign counts of a nondegenerate symmetric matrix, by congruent
// diagonalization over the rationals.
Signature symmetric_signature(const IntMatrix& g);

// Exact inverse of a nonsingular integer matrix.
RatMatrix rational_inverse(const IntMatrix& g);

RatMatrix rational_inverse(const RatMatrix& g);

}  // namespace k3lat
