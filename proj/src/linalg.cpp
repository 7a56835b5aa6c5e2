#include "k3lat/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace k3lat {

namespace {

// Quotient minimizing |a - q*b|, b != 0.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // r has the sign of b and |r| < |b|, so bumping q by one always shrinks
    // the remainder into [-|b|/2, |b|/2].
    Int abs_b = abs(b);
    if (2 * abs(r) > abs_b) q += 1;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);
    const int steps = std::min(nr, nc);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block is the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < nr; ++i)
                for (int j = t; j < nc; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi < 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { t = steps; break; }  // trailing block is zero
            if (pi != t) { a.swap_rows(t, pi); u.swap_rows(t, pi); }
            if (pj != t) { a.swap_cols(t, pj); v.swap_cols(t, pj); }

            bool dirty = false;
            for (int i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                Int q = nearest_quotient(a(i, t), a(t, t));
                if (q != 0) { a.add_row(i, t, -q); u.add_row(i, t, -q); }
                if (a(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                Int q = nearest_quotient(a(t, j), a(t, t));
                if (q != 0) { a.add_col(j, t, -q); v.add_col(j, t, -q); }
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // remainders left; re-pick a smaller pivot

            // Divisibility: d_t must divide the whole trailing block.
            bool fixed = true;
            for (int i = t + 1; i < nr && fixed; ++i)
                for (int j = t + 1; j < nc && fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) {
                if (a(t, t) < 0) { a.negate_row(t); u.negate_row(t); }
                break;
            }
        }
        if (t >= steps) break;
    }
    return SmithResult{std::move(u), std::move(a), std::move(v)};
}

IntVec invariant_factors(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    IntVec f;
    const int n = std::min(s.d.rows(), s.d.cols());
    for (int i = 0; i < n; ++i)
        if (s.d(i, i) > 1) f.push_back(s.d(i, i));
    return f;
}

IntVec smith_diagonal(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    IntVec d;
    const int n = std::min(s.d.rows(), s.d.cols());
    for (int i = 0; i < n; ++i) d.push_back(s.d(i, i));
    return d;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    const int nc = m.cols();
    const int steps = std::min(m.rows(), nc);
    std::vector<int> free_cols;
    for (int j = 0; j < nc; ++j)
        if (j >= steps || s.d(j, j) == 0) free_cols.push_back(j);
    IntMatrix k(nc, static_cast<int>(free_cols.size()));
    for (size_t c = 0; c < free_cols.size(); ++c)
        for (int i = 0; i < nc; ++i) k(i, static_cast<int>(c)) = s.v(i, free_cols[c]);
    return k;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Signature symmetric_signature(const IntMatrix& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("symmetric_signature: matrix not symmetric");
    const int n = g.rows();
    RatMatrix a(g);
    Signature sig;
    for (int t = 0; t < n; ++t) {
        if (a(t, t) == 0) {
            int p = -1;
            for (int j = t + 1; j < n; ++j)
                if (a(j, j) != 0) { p = j; break; }
            if (p >= 0) {
                for (int j = 0; j < n; ++j) std::swap(a(t, j), a(p, j));
                for (int i = 0; i < n; ++i) std::swap(a(i, t), a(i, p));
            } else {
                // All diagonal entries vanish; a(t,j) != 0 makes 2*a(t,j) a pivot.
                int q = -1;
                for (int j = t + 1; j < n; ++j)
                    if (a(t, j) != 0) { q = j; break; }
                if (q < 0) throw std::domain_error("symmetric_signature: degenerate form");
                for (int j = 0; j < n; ++j) a(t, j) += a(q, j);
                for (int i = 0; i < n; ++i) a(i, t) += a(i, q);
            }
        }
        const Rat pivot = a(t, t);
        if (pivot > 0) ++sig.t_plus; else ++sig.t_minus;
        for (int i = t + 1; i < n; ++i) {
            if (a(i, t) == 0) continue;
            Rat f = a(i, t) / pivot;
            for (int j = 0; j < n; ++j) a(i, j) -= f * a(t, j);
            for (int j = 0; j < n; ++j) a(j, i) -= f * a(j, t);
        }
    }
    return sig;
}

RatMatrix rational_inverse(const RatMatrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("rational_inverse: matrix not square");
    const int n = g.rows();
    RatMatrix a = g;
    RatMatrix inv = RatMatrix::identity(n);
    for (int t = 0; t < n; ++t) {
        int p = -1;
        for (int i = t; i < n; ++i)
            if (a(i, t) != 0) { p = i; break; }
        if (p < 0) throw std::domain_error("rational_inverse: singular matrix");
        if (p != t)
            for (int j = 0; j < n; ++j) {
                std::swap(a(t, j), a(p, j));
                std::swap(inv(t, j), inv(p, j));
            }
        Rat piv = a(t, t);
        for (int j = 0; j < n; ++j) { a(t, j) /= piv; inv(t, j) /= piv; }
        for (int i = 0; i < n; ++i) {
            if (i == t || a(i, t) == 0) continue;
            Rat f = a(i, t);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(t, j);
                inv(i, j) -= f * inv(t, j);
            }
        }
    }
    return inv;
}

RatMatrix rational_inverse(const IntMatrix& g) { return rational_inverse(RatMatrix(g)); }

}  // namespace k3lat
