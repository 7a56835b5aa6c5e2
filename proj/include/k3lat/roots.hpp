#pragma once

#include "k3lat/embeddings.hpp"

namespace k3lat {

// All vectors of the given (negative, even) norm in a negative definite
// lattice, one representative per +-pair, sign-normalized so the first
// nonzero coordinate is positive, sorted lexicographically. The default
// entry point enumerates subtrees in parallel; the serial variant is the
// reference implementation and must produce identical output.
std::vector<IntVec> short_vectors(const Lattice& l, const Int& norm, const Int& norm_bound = 100);
std::vector<IntVec> short_vectors_serial(const Lattice& l, const Int& norm, const Int& norm_bound = 100);

// Number of vectors of the given norm counting both signs.
long short_vector_count(const Lattice& l, const Int& norm);

// delta is a root iff delta^2 != 0 divides 2*(delta . L).
bool is_root(const Lattice& l, const IntVec& v);

// Matrix of the reflection x -> x - (2(x.delta)/delta^2) delta in the basis
// of l. Integral precisely because delta is a root.
IntMatrix reflection(const Lattice& l, const IntVec& delta);

// Degeneracy test for a polarization S in S_X: the explicit complement
// carries a vector of square -2.
bool is_degenerate(const EmbeddingWitness& s_into_sx);

// h lies in the interior of a chamber of the -2-reflection group iff no
// delta in h^perp has delta^2 = -2.
bool in_chamber_interior(const Lattice& s, const IntVec& h);

}  // namespace k3lat
