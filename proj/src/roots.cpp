#include "k3lat/roots.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3lat {

namespace {

// Rational Ldl^T data for a positive definite form: Q(x) = sum_i d_i (x_i +
// sum_{j>i} mu_ij x_j)^2 with exact rational coefficients.
struct Decomposition {
    int n;
    std::vector<Rat> d;
    RatMatrix mu;
};

Decomposition decompose_pos_def(const IntMatrix& q) {
    const int n = q.rows();
    RatMatrix a(q);
    Decomposition dec{n, std::vector<Rat>(n), RatMatrix(n, n)};
    for (int i = 0; i < n; ++i) {
        if (a(i, i) <= 0) throw std::domain_error("short_vectors: form not positive definite");
        dec.d[i] = a(i, i);
        for (int j = i + 1; j < n; ++j) dec.mu(i, j) = a(i, j) / a(i, i);
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c) a(r, c) -= a(r, i) * a(i, c) / a(i, i);
    }
    return dec;
}

// floor(c + sqrt(r)) and ceil(c - sqrt(r)) for rationals c, r >= 0.
Int floor_plus_sqrt(const Rat& c, const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    Int approx;
    {
        Int num_times_den = r.get_num() * r.get_den();
        mpz_sqrt(approx.get_mpz_t(), num_times_den.get_mpz_t());
        Int den = r.get_den();
        mpz_fdiv_q(approx.get_mpz_t(), approx.get_mpz_t(), den.get_mpz_t());
    }
    Int m = fl + approx;
    auto le = [&](const Int& x) {  // x <= c + sqrt(r)?
        Rat diff = Rat(x) - c;
        if (diff <= 0) return true;
        return diff * diff <= r;
    };
    while (le(m + 1)) ++m;
    while (!le(m)) --m;
    return m;
}

Int ceil_minus_sqrt(const Rat& c, const Rat& r) {
    // ceil(c - sqrt(r)) = -floor(-c + sqrt(r))
    return -floor_plus_sqrt(-c, r);
}

struct Enumerator {
    const Decomposition& dec;
    Int target;  // positive: enumerate Q(x) == target
    std::vector<IntVec>& out;
    IntVec x;

    // Enumerate coordinate i given the remaining budget and the partial
    // inner offsets sum_{j>i} mu_ij x_j.
    void walk(int i, const Rat& budget) {
        if (i < 0) {
            if (budget == 0) out.push_back(x);
            return;
        }
        Rat center = 0;
        for (int j = i + 1; j < dec.n; ++j)
            if (x[j] != 0) center += dec.mu(i, j) * Rat(x[j]);
        center = -center;
        Rat radius2 = budget / dec.d[i];
        Int lo = ceil_minus_sqrt(center, radius2);
        Int hi = floor_plus_sqrt(center, radius2);
        for (Int v = lo; v <= hi; ++v) {
            x[i] = v;
            Rat off = Rat(v) - center;
            Rat rem = budget - dec.d[i] * off * off;
            if (rem >= 0) walk(i - 1, rem);
        }
        x[i] = 0;
    }
};

void normalize_and_sort(std::vector<IntVec>& vecs) {
    std::vector<IntVec> keep;
    keep.reserve(vecs.size() / 2 + 1);
    for (IntVec& v : vecs) {
        int first = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) { first = static_cast<int>(i); break; }
        if (first < 0) continue;
        if (v[first] > 0) keep.push_back(std::move(v));
    }
    std::sort(keep.begin(), keep.end());
    vecs = std::move(keep);
}

std::vector<IntVec> short_vectors_impl(const Lattice& l, const Int& norm, const Int& norm_bound, bool parallel) {
    if (l.rank() > 0 && !l.is_negative_definite())
        throw std::domain_error("short_vectors: lattice must be negative definite");
    if (norm >= 0 || norm % 2 != 0) throw std::invalid_argument("short_vectors: norm must be negative and even");
    if (-norm > norm_bound) throw std::invalid_argument("short_vectors: |norm| exceeds bound");
    if (l.rank() == 0) return {};

    Decomposition dec = decompose_pos_def(-l.gram());
    const Int target = -norm;
    const int top = dec.n - 1;

    // Top coordinate range.
    Rat radius2 = Rat(target) / dec.d[top];
    Int lo = ceil_minus_sqrt(0, radius2);
    Int hi = floor_plus_sqrt(0, radius2);
    long branches = Int(hi - lo + 1).get_si();
    if (branches <= 0) return {};

    std::vector<std::vector<IntVec>> partial(branches);
    auto run_branch = [&](long bi) {
        Int v = lo + bi;
        Enumerator e{dec, target, partial[bi], IntVec(dec.n)};
        e.x[top] = v;
        Rat rem = Rat(target) - dec.d[top] * Rat(v) * Rat(v);
        if (rem >= 0) e.walk(top - 1, rem);
    };
    if (parallel && branches > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long bi = 0; bi < branches; ++bi) run_branch(bi);
    } else {
        for (long bi = 0; bi < branches; ++bi) run_branch(bi);
    }
    std::vector<IntVec> all;
    for (auto& part : partial)
        for (IntVec& v : part) all.push_back(std::move(v));
    normalize_and_sort(all);
    return all;
}

}  // namespace

std::vector<IntVec> short_vectors(const Lattice& l, const Int& norm, const Int& norm_bound) {
    return short_vectors_impl(l, norm, norm_bound, true);
}

std::vector<IntVec> short_vectors_serial(const Lattice& l, const Int& norm, const Int& norm_bound) {
    return short_vectors_impl(l, norm, norm_bound, false);
}

long short_vector_count(const Lattice& l, const Int& norm) {
    return 2 * static_cast<long>(short_vectors(l, norm).size());
}

bool is_root(const Lattice& l, const IntVec& v) {
    Int norm = bilinear(l.gram(), v, v);
    if (norm == 0) throw std::invalid_argument("is_root: zero-norm vector");
    IntVec gv = l.gram() * v;
    Int g = 0;
    for (const Int& x : gv) g = gcd(g, x);
    return (2 * g) % norm == 0;
}

IntMatrix reflection(const Lattice& l, const IntVec& delta) {
    if (!is_root(l, delta)) throw std::invalid_argument("reflection: vector is not a root");
    const int n = l.rank();
    Int norm = bilinear(l.gram(), delta, delta);
    IntVec gd = l.gram() * delta;
    IntMatrix r = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int num = 2 * delta[i] * gd[j];
            if (num % norm != 0) throw std::logic_error("reflection: non-integral entry");
            r(i, j) -= num / norm;
        }
    return r;
}

bool is_degenerate(const EmbeddingWitness& w) {
    if (!w.sub.is_hyperbolic() || !w.ambient.is_hyperbolic())
        throw std::domain_error("is_degenerate: sub and ambient must be hyperbolic");
    if (w.sub.rank() >= w.ambient.rank())
        throw std::domain_error("is_degenerate: sub must have smaller rank than ambient");
    Lattice comp = complement_explicit(w);
    if (!comp.is_negative_definite()) throw std::domain_error("is_degenerate: complement not negative definite");
    return !short_vectors(comp, -2).empty();
}

bool in_chamber_interior(const Lattice& s, const IntVec& h) {
    if (!s.is_hyperbolic()) throw std::domain_error("in_chamber_interior: lattice must be hyperbolic");
    Int h2 = bilinear(s.gram(), h, h);
    if (h2 <= 0) throw std::invalid_argument("in_chamber_interior: h^2 > 0 required");
    IntMatrix row(1, s.rank());
    IntVec gh = s.gram() * h;
    for (int j = 0; j < s.rank(); ++j) row(0, j) = gh[j];
    IntMatrix k = integer_kernel(row);
    if (k.cols() == 0) return true;
    IntMatrix gram_perp = k.transpose() * s.gram() * k;
    Lattice perp(gram_perp);
    return short_vectors(perp, -2).empty();
}

}  // namespace k3lat
