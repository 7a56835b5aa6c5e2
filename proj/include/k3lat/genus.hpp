#pragma once

#include "k3lat/disc_form.hpp"

namespace k3lat {

// One p-adic Jordan constituent of a discriminant form: scale p^k, rank n,
// sign, and for p = 2 the type (I/II) and oddity (type I only).
struct GenusComponent {
    Int prime;
    int scale = 1;  // level = prime^scale
    int rank = 0;
    int sign = +1;
    bool type2 = false;  // p = 2 only
    int oddity = 0;      // mod 8, meaningful for p = 2 type I

    Int level() const;
    bool operator==(const GenusComponent&) const = default;
};

class GenusSymbol {
public:
    GenusSymbol() = default;
    explicit GenusSymbol(std::vector<GenusComponent> comps);

    const std::vector<GenusComponent>& components() const { return comps_; }
    bool is_trivial() const { return comps_.empty(); }
    Int group_order() const;

    bool operator==(const GenusSymbol& o) const { return comps_ == o.comps_; }

    std::string str() const;

private:
    std::vector<GenusComponent> comps_;  // sorted by (prime, scale)
};

// Canonical genus symbol of a finite quadratic form. Constituents are
// computed by orthogonally splitting the form into rank-1 and rank-2 blocks,
// then normalized to the canonical representative (see canonicalize).
GenusSymbol genus_symbol(const FiniteQuadraticForm& q);

// Parses the textual notation, e.g. "2_2^{+2},4_{II}^{+4}", "3^{-1},9^{-1}",
// "0". Braces are optional; negative oddities are accepted.
GenusSymbol parse_genus_symbol(const std::string& text);

// Deterministic canonical representative of the symbol's equivalence class:
// the 2-adic sign/oddity vector is minimized lexicographically over all
// rewriting moves (scale-2 unit lifts, sign walks between adjacent scales
// and oddity transfers inside compartments).
GenusSymbol canonicalize(const GenusSymbol& s);

// True iff the two symbols present isomorphic finite quadratic forms.
bool canonical_equal(const GenusSymbol& a, const GenusSymbol& b);

// Genus-level isomorphism test for finite quadratic forms.
bool is_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

}  // namespace k3lat
