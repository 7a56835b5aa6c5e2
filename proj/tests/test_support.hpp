#pragma once

#include <random>

#include "k3lat/disc_form.hpp"

namespace k3lat::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A random even lattice assembled from the catalog: root lattices, U,
// small diagonal pieces, integer rescalings. |det| stays below det_bound.
inline Lattice random_catalog_lattice(Rng& rng, const Int& det_bound, int max_parts = 4) {
    for (;;) {
        std::vector<Lattice> parts;
        int n = pick(rng, 1, max_parts);
        for (int i = 0; i < n; ++i) {
            Lattice piece = [&]() -> Lattice {
                switch (pick(rng, 0, 5)) {
                    case 0:
                        return lattices::A(pick(rng, 1, 5));
                    case 1:
                        return lattices::D(pick(rng, 4, 6));
                    case 2:
                        return lattices::E(pick(rng, 6, 8));
                    case 3:
                        return lattices::U();
                    case 4:
                        return lattices::rank1(2 * pick(rng, 1, 6) * (pick(rng, 0, 1) ? 1 : -1));
                    default:
                        return lattices::A(1);
                }
            }();
            if (pick(rng, 0, 3) == 0) piece = rescale(piece, pick(rng, 2, 3));
            parts.push_back(std::move(piece));
        }
        Lattice l = direct_sum(parts);
        if (abs(l.determinant()) <= det_bound) return l;
    }
}

// Random unimodular basis change: a product of elementary transvections
// and sign flips applied as a congruence.
inline Lattice random_basis_change(Rng& rng, const Lattice& l, int ops = 12) {
    const int n = l.rank();
    if (n < 2) return l;
    IntMatrix t = IntMatrix::identity(n);
    for (int i = 0; i < ops; ++i) {
        int a = pick(rng, 0, n - 1);
        int b = pick(rng, 0, n - 1);
        if (a == b) {
            t.negate_row(a);
            continue;
        }
        t.add_row(a, b, Int(pick(rng, -2, 2)));
    }
    IntMatrix g = t.transpose() * l.gram() * t;
    // T acts on coordinates; the congruent Gram is T^t G T, unimodular
    // either way, so the lattice is unchanged up to isomorphism.
    return Lattice(std::move(g));
}

// Uniformly random finite quadratic form assembled from standard blocks.
inline FiniteQuadraticForm random_form(Rng& rng, long max_order = 128) {
    for (;;) {
        FiniteQuadraticForm q;
        int n = pick(rng, 0, 4);
        for (int i = 0; i < n; ++i) {
            FiniteQuadraticForm piece = [&]() -> FiniteQuadraticForm {
                switch (pick(rng, 0, 5)) {
                    case 0:
                        return blocks::w_block(2, pick(rng, 1, 3), 2 * pick(rng, 0, 3) + 1);
                    case 1:
                        return blocks::u_block(pick(rng, 1, 2));
                    case 2:
                        return blocks::v_block(pick(rng, 1, 2));
                    case 3:
                        return blocks::w_block(3, pick(rng, 1, 2), pick(rng, 1, 2));
                    case 4:
                        return blocks::w_block(5, 1, pick(rng, 1, 4));
                    default:
                        return blocks::w_block(7, 1, pick(rng, 1, 6));
                }
            }();
            q = direct_sum_q(q, piece);
        }
        if (q.group_order() <= max_order) return q;
    }
}

}  // namespace k3lat::testing
