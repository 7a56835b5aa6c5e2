#include "k3lat/embeddings.hpp"

#include <algorithm>

#include "k3lat/roots.hpp"

namespace k3lat {

int rank_of(const LatticeLike& l) {
    if (const Lattice* lat = std::get_if<Lattice>(&l)) return lat->rank();
    return std::get<GenusTriple>(l).rank();
}

Signature signature_of(const LatticeLike& l) {
    if (const Lattice* lat = std::get_if<Lattice>(&l)) return lat->signature();
    return std::get<GenusTriple>(l).signature();
}

FiniteQuadraticForm form_of(const LatticeLike& l) {
    if (const Lattice* lat = std::get_if<Lattice>(&l)) return discriminant_form(*lat);
    return std::get<GenusTriple>(l).q;
}

bool is_concrete(const LatticeLike& l) { return std::holds_alternative<Lattice>(l); }

void validate_witness(const EmbeddingWitness& w) {
    if (w.map.rows() != w.ambient.rank() || w.map.cols() != w.sub.rank())
        throw std::invalid_argument("witness: matrix shape does not match sub/ambient ranks");
    IntMatrix pulled = w.map.transpose() * w.ambient.gram() * w.map;
    if (pulled != w.sub.gram()) throw std::invalid_argument("witness: Gram condition fails");
    IntVec diag = smith_diagonal(w.map);
    for (const Int& f : diag)
        if (f != 1) throw std::invalid_argument("witness: image not primitive");
}

GenusTriple complement_genus(const LatticeLike& m, const Lattice& ambient) {
    if (!ambient.is_unimodular()) throw std::domain_error("complement_genus: ambient must be unimodular");
    const int rm = rank_of(m);
    if (rm >= ambient.rank()) throw std::domain_error("complement_genus: rank(M) < rank(ambient) required");
    Signature sm = signature_of(m);
    Signature sa = ambient.signature();
    if (sm.t_plus > sa.t_plus || sm.t_minus > sa.t_minus)
        throw std::domain_error("complement_genus: signature of M does not fit into ambient");
    GenusTriple g;
    g.t_plus = sa.t_plus - sm.t_plus;
    g.t_minus = sa.t_minus - sm.t_minus;
    g.q = negate(form_of(m));
    return g;
}

PairReport verify_complement_pair(const LatticeLike& s, const LatticeLike& t, const Lattice& ambient) {
    if (!ambient.is_unimodular()) throw std::domain_error("verify_complement_pair: ambient must be unimodular");
    PairReport r;
    r.ranks_add = rank_of(s) + rank_of(t) == ambient.rank();
    Signature ss = signature_of(s), st = signature_of(t), sa = ambient.signature();
    r.signatures_add = ss.t_plus + st.t_plus == sa.t_plus && ss.t_minus + st.t_minus == sa.t_minus;
    r.forms_match = is_isomorphic(form_of(t), negate(form_of(s)));
    return r;
}

ExistenceVerdict existence_check(const GenusTriple& g) {
    ExistenceVerdict v;
    int l = min_generators(g.q);
    if (g.rank() < l) {
        v.consistent = false;
        v.reason = "rank " + std::to_string(g.rank()) + " below minimal generator count " + std::to_string(l);
        return v;
    }
    int want = ((g.t_plus - g.t_minus) % 8 + 8) % 8;
    int have = gauss_signature(g.q);
    if (want != have) {
        v.consistent = false;
        v.reason = "Milgram mismatch: signature " + std::to_string(want) + " vs Gauss sum " + std::to_string(have);
    }
    return v;
}

std::string to_string(Uniqueness u) { return u == Uniqueness::Unique ? "Unique" : "Inconclusive"; }

Uniqueness nikulin_unique(const GenusTriple& g) {
    if (g.t_plus >= 1 && g.t_minus >= 1 && g.rank() >= 2 + min_generators(g.q)) return Uniqueness::Unique;
    return Uniqueness::Inconclusive;
}

Lattice complement_explicit(const EmbeddingWitness& w) {
    validate_witness(w);
    IntMatrix pairing = w.map.transpose() * w.ambient.gram();  // sub.rank x N
    IntMatrix k = integer_kernel(pairing);
    IntMatrix gram = k.transpose() * w.ambient.gram() * k;
    return Lattice(std::move(gram));
}

std::optional<EmbeddingWitness> find_embedding_definite(const Lattice& m, const Lattice& ambient) {
    if (!m.is_negative_definite() || !ambient.is_negative_definite())
        throw std::domain_error("find_embedding_definite: both lattices must be negative definite");
    if (ambient.rank() > 8) throw std::domain_error("find_embedding_definite: ambient rank must be <= 8");
    if (m.rank() >= ambient.rank())
        throw std::domain_error("find_embedding_definite: rank(M) < rank(ambient) required");

    const int r = m.rank();
    const int n = ambient.rank();
    // Candidate images per basis vector, both signs except for the first.
    std::vector<std::vector<IntVec>> candidates(r);
    for (int i = 0; i < r; ++i) {
        Int norm = m.gram()(i, i);
        std::vector<IntVec> reps = short_vectors(ambient, norm);
        if (i == 0) {
            candidates[i] = std::move(reps);
        } else {
            for (IntVec& v : reps) {
                IntVec neg(n);
                for (int j = 0; j < n; ++j) neg[j] = -v[j];
                candidates[i].push_back(std::move(neg));
                candidates[i].push_back(std::move(v));
            }
            std::sort(candidates[i].begin(), candidates[i].end());
        }
        if (candidates[i].empty()) return std::nullopt;
    }

    std::vector<IntVec> chosen(r);
    IntMatrix map(n, r);
    std::optional<EmbeddingWitness> found;

    auto backtrack = [&](auto&& self, int level) -> bool {
        if (level == r) {
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < n; ++i) map(i, j) = chosen[j][i];
            for (const Int& f : smith_diagonal(map))
                if (f != 1) return false;
            found = EmbeddingWitness{m, ambient, map};
            return true;
        }
        for (const IntVec& v : candidates[level]) {
            bool ok = true;
            for (int j = 0; j < level && ok; ++j)
                if (bilinear(ambient.gram(), chosen[j], v) != m.gram()(j, level)) ok = false;
            if (!ok) continue;
            chosen[level] = v;
            if (self(self, level + 1)) return true;
        }
        return false;
    };
    backtrack(backtrack, 0);
    return found;
}

}  // namespace k3lat
