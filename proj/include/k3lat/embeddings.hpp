#pragma once

#include <optional>
#include <variant>

#include "k3lat/genus.hpp"

namespace k3lat {

// Genus of an even lattice: signature plus discriminant form. Stands in for
// a lattice when only invariants are known (orthogonal complements taken at
// genus level).
struct GenusTriple {
    int t_plus = 0;
    int t_minus = 0;
    FiniteQuadraticForm q;

    int rank() const { return t_plus + t_minus; }
    Signature signature() const { return Signature{t_plus, t_minus}; }
};

// A lattice, or its genus when no Gram matrix is available.
using LatticeLike = std::variant<Lattice, GenusTriple>;

int rank_of(const LatticeLike& l);
Signature signature_of(const LatticeLike& l);
FiniteQuadraticForm form_of(const LatticeLike& l);
bool is_concrete(const LatticeLike& l);

// Primitive embedding of `sub` into `ambient`: column j of `map` holds the
// ambient coordinates of the j-th basis vector of `sub`.
struct EmbeddingWitness {
    Lattice sub;
    Lattice ambient;
    IntMatrix map;
};

// Checks the Gram identity map^T G map = G_sub and primitivity of the image
// (all invariant factors of `map` equal 1). Throws on failure.
void validate_witness(const EmbeddingWitness& w);

// Genus of the orthogonal complement of M inside an even unimodular ambient
// lattice: signature difference with form -q_M.
GenusTriple complement_genus(const LatticeLike& m, const Lattice& ambient);

struct PairReport {
    bool ranks_add = false;
    bool signatures_add = false;
    bool forms_match = false;  // q_T = -q_S
    bool all() const { return ranks_add && signatures_add && forms_match; }
};

// The mutual-complement criterion: S and T sit as complements of each other
// in `ambient` iff ranks and signatures add up and q_T = -q_S.
PairReport verify_complement_pair(const LatticeLike& s, const LatticeLike& t, const Lattice& ambient);

struct ExistenceVerdict {
    bool consistent = true;
    std::string reason;  // set when impossible
};

// Necessary conditions for an even lattice with invariants g to exist:
// Milgram signature match and rank >= minimal generator count.
ExistenceVerdict existence_check(const GenusTriple& g);

enum class Uniqueness { Unique, Inconclusive };

std::string to_string(Uniqueness u);

// Sufficient criterion for uniqueness of an even lattice in its genus:
// indefinite with rank exceeding the generator count by at least 2.
Uniqueness nikulin_unique(const GenusTriple& g);

// Gram matrix of {x in ambient : x . image = 0} for a validated witness.
Lattice complement_explicit(const EmbeddingWitness& w);

// Backtracking search for a primitive embedding of a negative definite
// lattice into a negative definite ambient lattice of rank <= 8.
std::optional<EmbeddingWitness> find_embedding_definite(const Lattice& m, const Lattice& ambient);

}  // namespace k3lat
