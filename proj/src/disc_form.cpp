#include "k3lat/disc_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3lat {

Rat mod2(const Rat& x) {
    Rat half = x / 2;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    Rat r = x - 2 * Rat(fl);
    r.canonicalize();
    return r;
}

Rat mod1(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rat r = x - Rat(fl);
    r.canonicalize();
    return r;
}

FiniteQuadraticForm::FiniteQuadraticForm() : b_(0, 0) {}

FiniteQuadraticForm::FiniteQuadraticForm(IntVec orders, std::vector<Rat> q_values, RatMatrix b_values)
    : orders_(std::move(orders)), q_(std::move(q_values)), b_(std::move(b_values)) {
    for (Rat& x : q_) x = mod2(x);
    for (int i = 0; i < b_.rows(); ++i)
        for (int j = 0; j < b_.cols(); ++j) b_(i, j) = mod1(b_(i, j));
    validate();
}

void FiniteQuadraticForm::validate() const {
    const int k = gens();
    if (static_cast<int>(q_.size()) != k || b_.rows() != k || b_.cols() != k)
        throw std::invalid_argument("FiniteQuadraticForm: size mismatch");
    for (int i = 0; i < k; ++i) {
        if (orders_[i] < 2) throw std::invalid_argument("FiniteQuadraticForm: orders must be >= 2");
        if (i + 1 < k && orders_[i + 1] % orders_[i] != 0)
            throw std::invalid_argument("FiniteQuadraticForm: invariant factors must form a chain");
        if (mod2(q_[i] * orders_[i] * orders_[i]) != 0)
            throw std::invalid_argument("FiniteQuadraticForm: d^2*q(g) != 0 mod 2Z");
        if (mod1(b_(i, i) - q_[i]) != 0)
            throw std::invalid_argument("FiniteQuadraticForm: b(g,g) != q(g) mod Z");
        for (int j = 0; j < k; ++j) {
            if (b_(i, j) != b_(j, i)) throw std::invalid_argument("FiniteQuadraticForm: b not symmetric");
            if (mod1(b_(i, j) * orders_[i]) != 0)
                throw std::invalid_argument("FiniteQuadraticForm: d*b(g,h) != 0 mod Z");
        }
    }
    // Nondegeneracy: the radical {x : b(x,.) = 0} must be trivial. The
    // lattice of lifts {x in Z^k : B*x integral} has index prod(d_i) in Z^k
    // exactly when the radical is trivial.
    if (k == 0) return;
    Int lc = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), b_(i, j).get_den().get_mpz_t());
    IntMatrix m(k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Rat scaled = b_(i, j) * Rat(lc);
            m(i, j) = scaled.get_num();
        }
        m(i, k + i) = lc;
    }
    IntMatrix ker = integer_kernel(m);
    if (ker.cols() < k) throw std::logic_error("FiniteQuadraticForm: kernel rank too small");
    IntMatrix lam(k, k);
    // The solution lattice projects isomorphically to its first k coordinates.
    if (ker.cols() != k) {
        // Extra kernel columns cannot occur: y is determined by x.
        throw std::logic_error("FiniteQuadraticForm: unexpected kernel dimension");
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) lam(i, j) = ker(i, j);
    Int idx = abs(determinant(lam));
    if (idx != group_order()) throw std::invalid_argument("FiniteQuadraticForm: degenerate bilinear form");
}

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (const Int& d : orders_) n *= d;
    return n;
}

Rat FiniteQuadraticForm::eval_q(const IntVec& coeffs) const {
    const int k = gens();
    if (static_cast<int>(coeffs.size()) != k) throw std::invalid_argument("eval_q: coefficient count mismatch");
    Rat s = 0;
    IntVec c(k);
    for (int i = 0; i < k; ++i) {
        mpz_mod(c[i].get_mpz_t(), coeffs[i].get_mpz_t(), orders_[i].get_mpz_t());
    }
    for (int i = 0; i < k; ++i) {
        if (c[i] == 0) continue;
        s += Rat(c[i] * c[i]) * q_[i];
        for (int j = i + 1; j < k; ++j)
            if (c[j] != 0) s += 2 * Rat(c[i] * c[j]) * b_(i, j);
    }
    return mod2(s);
}

Rat FiniteQuadraticForm::eval_b(const IntVec& x, const IntVec& y) const {
    const int k = gens();
    Rat s = 0;
    for (int i = 0; i < k; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            if (y[j] != 0) s += Rat(x[i] * y[j]) * b_(i, j);
    }
    return mod1(s);
}

Int FiniteQuadraticForm::element_order(const IntVec& coeffs) const {
    Int ord = 1;
    for (int i = 0; i < gens(); ++i) {
        Int c;
        mpz_mod(c.get_mpz_t(), coeffs[i].get_mpz_t(), orders_[i].get_mpz_t());
        if (c == 0) continue;
        Int g = gcd(c, orders_[i]);
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), Int(orders_[i] / g).get_mpz_t());
    }
    return ord;
}

bool FiniteQuadraticForm::operator==(const FiniteQuadraticForm& o) const {
    return orders_ == o.orders_ && q_ == o.q_ && b_ == o.b_;
}

std::string FiniteQuadraticForm::str() const {
    std::ostringstream os;
    os << "A = ";
    if (orders_.empty()) {
        os << "0";
        return os.str();
    }
    for (size_t i = 0; i < orders_.size(); ++i) {
        os << "Z/" << orders_[i].get_str();
        if (i + 1 < orders_.size()) os << " + ";
    }
    os << ", q = (";
    for (size_t i = 0; i < q_.size(); ++i) {
        os << q_[i].get_str();
        if (i + 1 < q_.size()) os << ", ";
    }
    os << ")";
    return os.str();
}

namespace {

// Re-present a form given by generators of the stated orders (not
// necessarily a chain) in invariant-factor form.
FiniteQuadraticForm represent_canonically(const IntVec& raw_orders, const std::vector<Rat>& raw_q,
                                          const RatMatrix& raw_b) {
    const int m = static_cast<int>(raw_orders.size());
    if (m == 0) return FiniteQuadraticForm();
    IntMatrix rel(m, m);
    for (int i = 0; i < m; ++i) rel(i, i) = raw_orders[i];
    SmithResult s = smith_normal_form(rel);
    IntMatrix uinv = rational_inverse(s.u).to_int();

    // Evaluation helpers on the raw presentation.
    auto q_of = [&](const IntVec& c) {
        Rat acc = 0;
        for (int i = 0; i < m; ++i) {
            if (c[i] == 0) continue;
            acc += Rat(c[i] * c[i]) * raw_q[i];
            for (int j = i + 1; j < m; ++j)
                if (c[j] != 0) acc += 2 * Rat(c[i] * c[j]) * raw_b(i, j);
        }
        return mod2(acc);
    };
    auto b_of = [&](const IntVec& x, const IntVec& y) {
        Rat acc = 0;
        for (int i = 0; i < m; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < m; ++j)
                if (y[j] != 0) acc += Rat(x[i] * y[j]) * raw_b(i, j);
        }
        return mod1(acc);
    };

    std::vector<int> keep;
    for (int i = 0; i < m; ++i)
        if (s.d(i, i) > 1) keep.push_back(i);
    const int k = static_cast<int>(keep.size());
    IntVec orders(k);
    std::vector<IntVec> gens(k, IntVec(m));
    for (int a = 0; a < k; ++a) {
        orders[a] = s.d(keep[a], keep[a]);
        for (int i = 0; i < m; ++i) {
            mpz_mod(gens[a][i].get_mpz_t(), uinv(i, keep[a]).get_mpz_t(), raw_orders[i].get_mpz_t());
        }
    }
    std::vector<Rat> q(k);
    RatMatrix b(k, k);
    for (int a = 0; a < k; ++a) {
        q[a] = q_of(gens[a]);
        for (int c = 0; c < k; ++c) b(a, c) = b_of(gens[a], gens[c]);
    }
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

}  // namespace

FiniteQuadraticForm discriminant_form(const Lattice& l) {
    const int n = l.rank();
    if (n == 0) return FiniteQuadraticForm();
    SmithResult s = smith_normal_form(l.gram());
    IntMatrix uinv = rational_inverse(s.u).to_int();
    RatMatrix ginv = l.dual_gram();

    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (s.d(i, i) > 1) keep.push_back(i);
    const int k = static_cast<int>(keep.size());
    IntVec orders(k);
    std::vector<Rat> q(k);
    RatMatrix b(k, k);
    // Generator a lives in L* with dual-basis coordinates U^{-1} e_{keep[a]}.
    for (int a = 0; a < k; ++a) orders[a] = s.d(keep[a], keep[a]);
    for (int a = 0; a < k; ++a) {
        for (int c = a; c < k; ++c) {
            Rat val = 0;
            for (int i = 0; i < n; ++i) {
                if (uinv(i, keep[a]) == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (uinv(j, keep[c]) != 0) val += Rat(uinv(i, keep[a]) * uinv(j, keep[c])) * ginv(i, j);
            }
            if (c == a)
                q[a] = mod2(val);
            else
                b(a, c) = b(c, a) = mod1(val);
        }
        b(a, a) = mod1(q[a]);
    }
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

FiniteQuadraticForm negate(const FiniteQuadraticForm& f) {
    const int k = f.gens();
    std::vector<Rat> q(k);
    RatMatrix b(k, k);
    for (int i = 0; i < k; ++i) {
        q[i] = mod2(-f.q_value(i));
        for (int j = 0; j < k; ++j) b(i, j) = mod1(-f.b_value(i, j));
    }
    return FiniteQuadraticForm(f.orders(), std::move(q), std::move(b));
}

FiniteQuadraticForm direct_sum_q(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    const int ka = a.gens(), kb = b.gens();
    IntVec orders;
    orders.reserve(ka + kb);
    for (const Int& d : a.orders()) orders.push_back(d);
    for (const Int& d : b.orders()) orders.push_back(d);
    std::vector<Rat> q(ka + kb);
    RatMatrix bm(ka + kb, ka + kb);
    for (int i = 0; i < ka; ++i) {
        q[i] = a.q_value(i);
        for (int j = 0; j < ka; ++j) bm(i, j) = a.b_value(i, j);
    }
    for (int i = 0; i < kb; ++i) {
        q[ka + i] = b.q_value(i);
        for (int j = 0; j < kb; ++j) bm(ka + i, ka + j) = b.b_value(i, j);
    }
    return represent_canonically(orders, q, bm);
}

FiniteQuadraticForm p_primary_part(const FiniteQuadraticForm& f, const Int& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("p_primary_part: p must be prime");
    IntVec orders;
    std::vector<Int> factors;  // d_i / p^{v_i}
    std::vector<int> idx;
    for (int i = 0; i < f.gens(); ++i) {
        Int d = f.orders()[i];
        Int pk = 1;
        while (d % p == 0) {
            d /= p;
            pk *= p;
        }
        if (pk > 1) {
            orders.push_back(pk);
            factors.push_back(d);
            idx.push_back(i);
        }
    }
    const int k = static_cast<int>(orders.size());
    std::vector<Rat> q(k);
    RatMatrix b(k, k);
    for (int a = 0; a < k; ++a) {
        q[a] = mod2(Rat(factors[a] * factors[a]) * f.q_value(idx[a]));
        for (int c = 0; c < k; ++c) b(a, c) = mod1(Rat(factors[a] * factors[c]) * f.b_value(idx[a], idx[c]));
    }
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

std::vector<Int> support_primes(const FiniteQuadraticForm& q) {
    std::vector<Int> primes;
    Int n = q.group_order();
    Int p = 2;
    while (n > 1) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return primes;
}

int min_generators(const FiniteQuadraticForm& q) { return q.gens(); }

namespace {

// One odometer pass over A accumulating exp(pi*i*q(x)). All q-values are
// handled as integers N(x) = q(x)*den mod 2*den.
struct GaussAccumulator {
    const FiniteQuadraticForm& f;
    int k;
    long den;                            // common denominator of all values
    std::vector<long> qd;                // q_i * den
    std::vector<std::vector<long>> bd2;  // 2 * b_ij * den
    std::vector<long> dims;

    explicit GaussAccumulator(const FiniteQuadraticForm& form) : f(form), k(form.gens()) {
        Int lc = 2;
        for (int i = 0; i < k; ++i) {
            mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), f.q_value(i).get_den().get_mpz_t());
            for (int j = 0; j < k; ++j) mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), f.b_value(i, j).get_den().get_mpz_t());
        }
        if (!lc.fits_slong_p()) throw std::domain_error("gauss_signature: denominators too large");
        den = lc.get_si();
        qd.resize(k);
        bd2.assign(k, std::vector<long>(k));
        dims.resize(k);
        for (int i = 0; i < k; ++i) {
            qd[i] = static_cast<long>(Rat(f.q_value(i) * Rat(den)).get_num().get_si());
            dims[i] = f.orders()[i].get_si();
            for (int j = 0; j < k; ++j)
                bd2[i][j] = static_cast<long>(Rat(2 * f.b_value(i, j) * Rat(den)).get_num().get_si()) % (2 * den);
        }
    }

    // Sum over linear indices [lo, hi). Element index decomposes in mixed
    // radix, least significant coordinate first.
    void run(long lo, long hi, double& re_out, double& im_out) const {
        const long mod = 2 * den;
        std::vector<long> x(k);
        long rem = lo;
        for (int i = 0; i < k; ++i) {
            x[i] = rem % dims[i];
            rem /= dims[i];
        }
        // N = q(x)*den mod 2*den, S[i] = 2*b(x, g_i)*den mod 2*den.
        auto norm = [&](long v) { return ((v % mod) + mod) % mod; };
        long n_val = 0;
        std::vector<long> s_val(k, 0);
        for (int i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            n_val = norm(n_val + static_cast<long>((static_cast<__int128>(x[i]) * x[i] % mod) * qd[i] % mod));
            for (int j = 0; j < i; ++j)
                if (x[j] != 0) n_val = norm(n_val + static_cast<long>(static_cast<__int128>(x[i]) * x[j] % mod * bd2[i][j] % mod));
            for (int j = 0; j < k; ++j) s_val[j] = norm(s_val[j] + x[i] * (bd2[i][j] % mod) % mod);
        }
        double re = 0, im = 0;
        const double scale = std::numbers::pi / static_cast<double>(den);
        for (long idx = lo; idx < hi; ++idx) {
            re += std::cos(scale * static_cast<double>(n_val));
            im += std::sin(scale * static_cast<double>(n_val));
            if (idx + 1 == hi) break;
            // advance odometer: apply coordinate delta c to position m via
            // q(x + c e_m) = q(x) + c^2 q_m + c * 2b(x, g_m).
            auto bump = [&](int m, long c) {
                long cc = norm(static_cast<long>(static_cast<__int128>(c) * c % mod * qd[m] % mod));
                long cs = norm(static_cast<long>(static_cast<__int128>(norm(c)) * s_val[m] % mod));
                n_val = norm(n_val + cc + cs);
                for (int j = 0; j < k; ++j) s_val[j] = norm(s_val[j] + c * (bd2[m][j] % mod) % mod);
                x[m] += c;
            };
            int m = 0;
            while (x[m] + 1 == dims[m]) {
                bump(m, -(dims[m] - 1));
                ++m;
            }
            bump(m, 1);
        }
        re_out = re;
        im_out = im;
    }
};

int snap_to_eighth_root(double re, double im, double sqrt_n, double tol) {
    for (int s = 0; s < 8; ++s) {
        double tr = sqrt_n * std::cos(std::numbers::pi * s / 4);
        double ti = sqrt_n * std::sin(std::numbers::pi * s / 4);
        if (std::abs(re - tr) <= tol * sqrt_n && std::abs(im - ti) <= tol * sqrt_n) return s;
    }
    throw std::domain_error("gauss_signature: sum does not snap to an eighth root");
}

int gauss_impl(const FiniteQuadraticForm& q, long bound, bool parallel) {
    Int n = q.group_order();
    if (n > bound) throw std::domain_error("gauss_signature: group order exceeds bound");
    const long total = n.get_si();
    GaussAccumulator acc(q);
    double re = 0, im = 0;
    if (!parallel || total < (1L << 12)) {
        acc.run(0, total, re, im);
    } else {
        int chunks = 1;
#ifdef _OPENMP
        chunks = std::max(1, omp_get_max_threads());
#endif
        std::vector<double> res(chunks, 0.0), ims(chunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int c = 0; c < chunks; ++c) {
            long lo = total * c / chunks;
            long hi = total * (c + 1) / chunks;
            if (lo < hi) acc.run(lo, hi, res[c], ims[c]);
        }
        for (int c = 0; c < chunks; ++c) {
            re += res[c];
            im += ims[c];
        }
    }
    return snap_to_eighth_root(re, im, std::sqrt(static_cast<double>(total)), 1e-6);
}

}  // namespace

int gauss_signature(const FiniteQuadraticForm& q, long bound) { return gauss_impl(q, bound, true); }

int gauss_signature_serial(const FiniteQuadraticForm& q, long bound) { return gauss_impl(q, bound, false); }

namespace {

// Element table of a small group: mixed-radix indexing plus precomputed
// q-values, pairwise b-values and addition table.
struct SmallGroup {
    int k = 0;
    long n = 1;
    std::vector<long> dims;
    std::vector<IntVec> elems;
    std::vector<Rat> qv;
    std::vector<long> ordv;
    std::vector<std::vector<long>> add;

    explicit SmallGroup(const FiniteQuadraticForm& f) {
        k = f.gens();
        for (int i = 0; i < k; ++i) dims.push_back(f.orders()[i].get_si());
        for (int i = 0; i < k; ++i) n *= dims[i];
        elems.resize(n, IntVec(k));
        for (long idx = 0; idx < n; ++idx) {
            long rem = idx;
            for (int i = 0; i < k; ++i) {
                elems[idx][i] = rem % dims[i];
                rem /= dims[i];
            }
        }
        qv.resize(n);
        ordv.resize(n);
        for (long idx = 0; idx < n; ++idx) {
            qv[idx] = f.eval_q(elems[idx]);
            ordv[idx] = f.element_order(elems[idx]).get_si();
        }
        add.assign(n, std::vector<long>(n));
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                long idx = 0, mul = 1;
                for (int i = 0; i < k; ++i) {
                    long c = (elems[a][i].get_si() + elems[b][i].get_si()) % dims[i];
                    idx += c * mul;
                    mul *= dims[i];
                }
                add[a][b] = idx;
            }
    }
};

bool extend_iso(const FiniteQuadraticForm& a, const SmallGroup& g, std::vector<long>& images,
                std::vector<char>& span, long span_size, int level) {
    const int k = a.gens();
    if (level == k) return true;
    const long want_order = a.orders()[level].get_si();
    const Rat& want_q = a.q_value(level);
    for (long y = 0; y < g.n; ++y) {
        if (g.ordv[y] != want_order || g.qv[y] != want_q) continue;
        bool ok = true;
        for (int j = 0; j < level && ok; ++j) {
            // b(y_j, y) must match b(g_j, g_level)
            Rat need = a.b_value(j, level);
            Rat have = mod1((g.qv[g.add[images[j]][y]] - g.qv[images[j]] - g.qv[y]) / 2);
            if (need != have) ok = false;
        }
        if (!ok) continue;
        // Span pruning: independent generators must enlarge the subgroup by
        // exactly their order.
        std::vector<long> fresh;
        for (long s = 0; s < g.n; ++s) {
            if (!span[s]) continue;
            long cur = s;
            for (long c = 1; c < want_order; ++c) {
                cur = g.add[cur][y];
                if (!span[cur]) fresh.push_back(cur);
            }
        }
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
        if (span_size + static_cast<long>(fresh.size()) != span_size * want_order) {
            continue;
        }
        for (long s : fresh) span[s] = 1;
        images[level] = y;
        if (extend_iso(a, g, images, span, span_size * want_order, level + 1)) return true;
        for (long s : fresh) span[s] = 0;
    }
    return false;
}

}  // namespace

bool brute_force_iso(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long bound) {
    if (a.group_order() != b.group_order()) return false;
    if (a.orders() != b.orders()) return false;
    if (a.group_order() > bound) throw std::domain_error("brute_force_iso: group order exceeds bound");
    if (a.is_trivial()) return true;
    SmallGroup g(b);
    std::vector<long> images(a.gens(), 0);
    std::vector<char> span(g.n, 0);
    span[0] = 1;
    return extend_iso(a, g, images, span, 1, 0);
}

namespace blocks {

FiniteQuadraticForm w_block(const Int& p, int k, const Int& num) {
    Int level = 1;
    for (int i = 0; i < k; ++i) level *= p;
    if (p == 2 && num % 2 == 0) throw std::invalid_argument("w_block: numerator must be odd for p=2");
    if (p != 2 && num % p == 0) throw std::invalid_argument("w_block: numerator must be a unit");
    IntVec orders{level};
    std::vector<Rat> q{mod2(Rat(num, level))};
    RatMatrix b(1, 1);
    b(0, 0) = mod1(q[0]);
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

FiniteQuadraticForm u_block(int k) {
    Int level = Int(1) << k;
    IntVec orders{level, level};
    std::vector<Rat> q{Rat(0), Rat(0)};
    RatMatrix b(2, 2);
    b(0, 1) = b(1, 0) = Rat(1, level);
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

FiniteQuadraticForm v_block(int k) {
    Int level = Int(1) << k;
    IntVec orders{level, level};
    std::vector<Rat> q{mod2(Rat(2, level)), mod2(Rat(2, level))};
    RatMatrix b(2, 2);
    b(0, 0) = b(1, 1) = mod1(Rat(2, level));
    b(0, 1) = b(1, 0) = Rat(1, level);
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

}  // namespace blocks

}  // namespace k3lat
