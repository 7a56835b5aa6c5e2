#include "k3lat/genus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <cctype>
#include <sstream>

namespace k3lat {

Int GenusComponent::level() const {
    Int l = 1;
    for (int i = 0; i < scale; ++i) l *= prime;
    return l;
}

GenusSymbol::GenusSymbol(std::vector<GenusComponent> comps) : comps_(std::move(comps)) {
    std::sort(comps_.begin(), comps_.end(), [](const GenusComponent& a, const GenusComponent& b) {
        if (a.prime != b.prime) return a.prime < b.prime;
        return a.scale < b.scale;
    });
    for (size_t i = 0; i < comps_.size(); ++i) {
        const GenusComponent& c = comps_[i];
        if (c.rank < 1) throw std::invalid_argument("GenusSymbol: component rank must be >= 1");
        if (c.scale < 1) throw std::invalid_argument("GenusSymbol: scale must be >= 1");
        if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("GenusSymbol: sign must be +-1");
        if (c.type2 && c.prime != 2) throw std::invalid_argument("GenusSymbol: type II needs p = 2");
        if (c.prime == 2 && !c.type2 && (c.oddity % 2) != (c.rank % 2))
            throw std::invalid_argument("GenusSymbol: oddity parity inconsistent with rank");
        if (c.type2 && c.rank % 2 != 0) throw std::invalid_argument("GenusSymbol: type II rank must be even");
        if (i > 0 && comps_[i - 1].prime == c.prime && comps_[i - 1].scale == c.scale)
            throw std::invalid_argument("GenusSymbol: duplicate constituent");
    }
}

Int GenusSymbol::group_order() const {
    Int n = 1;
    for (const GenusComponent& c : comps_) {
        Int l = c.level();
        for (int i = 0; i < c.rank; ++i) n *= l;
    }
    return n;
}

std::string GenusSymbol::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < comps_.size(); ++i) {
        const GenusComponent& c = comps_[i];
        os << c.level().get_str();
        if (c.prime == 2) {
            if (c.type2)
                os << "_{II}";
            else
                os << "_" << c.oddity;
        }
        os << "^{" << (c.sign > 0 ? "+" : "-") << c.rank << "}";
        if (i + 1 < comps_.size()) os << ",";
    }
    return os.str();
}

namespace {

int p_valuation(const Int& n, const Int& p) {
    Int m = n;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

// Orthogonal block of the splitting: rank 1 (q1) or a 2x2 type-II pair.
struct Block {
    int scale = 1;
    bool pair = false;
    Rat q1, q2, b12;
};

// Orthogonally splits the p-primary form into rank-1 and (for p = 2)
// rank-2 blocks. Generators are tracked as coefficient vectors in the
// presentation of fp, so all values stay exact.
std::vector<Block> split_blocks(const FiniteQuadraticForm& fp, const Int& p) {
    std::vector<Block> blocks;
    const int k = fp.gens();
    std::vector<IntVec> gens;
    for (int i = 0; i < k; ++i) {
        IntVec e(k);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    auto reduce = [&](IntVec& v) {
        for (int i = 0; i < k; ++i) mpz_mod(v[i].get_mpz_t(), v[i].get_mpz_t(), fp.orders()[i].get_mpz_t());
    };
    auto add_scaled = [&](const IntVec& v, const Int& c, const IntVec& w) {
        IntVec r(k);
        for (int i = 0; i < k; ++i) r[i] = v[i] + c * w[i];
        reduce(r);
        return r;
    };

    while (!gens.empty()) {
        // Drop generators that became zero during previous splits.
        std::erase_if(gens, [&](const IntVec& g) { return fp.element_order(g) == 1; });
        if (gens.empty()) break;

        Int maxord = 1;
        for (const IntVec& g : gens) maxord = std::max(maxord, fp.element_order(g));
        const int a = p_valuation(maxord, p);

        // Unit diagonal at top scale gives a rank-1 block.
        int xi = -1;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (fp.element_order(gens[i]) != maxord) continue;
            if (fp.eval_b(gens[i], gens[i]).get_den() == maxord) {
                xi = static_cast<int>(i);
                break;
            }
        }

        if (xi < 0) {
            // Pick x of top order and a partner z with unit pairing.
            int x_idx = -1, z_idx = -1;
            for (size_t i = 0; i < gens.size() && x_idx < 0; ++i) {
                if (fp.element_order(gens[i]) != maxord) continue;
                for (size_t j = 0; j < gens.size(); ++j) {
                    if (j == i) continue;
                    if (fp.eval_b(gens[i], gens[j]).get_den() == maxord) {
                        x_idx = static_cast<int>(i);
                        z_idx = static_cast<int>(j);
                        break;
                    }
                }
            }
            if (x_idx < 0) throw std::logic_error("split_blocks: no pivot found (degenerate form?)");

            if (p != 2) {
                // Some x + c*z has a unit diagonal value (quadratic in c with
                // a unit linear coefficient, so at most two roots mod p).
                bool done = false;
                for (Int c = 0; c < p && !done; ++c) {
                    IntVec cand = add_scaled(gens[x_idx], c, gens[z_idx]);
                    if (fp.eval_b(cand, cand).get_den() == maxord) {
                        gens[x_idx] = cand;
                        xi = x_idx;
                        done = true;
                    }
                }
                if (!done) throw std::logic_error("split_blocks: no unit diagonal found for odd p");
            } else {
                // 2x2 type-II block spanned by x and z.
                IntVec x = gens[x_idx], z = gens[z_idx];
                Block blk;
                blk.scale = a;
                blk.pair = true;
                blk.q1 = fp.eval_q(x);
                blk.q2 = fp.eval_q(z);
                blk.b12 = fp.eval_b(x, z);
                blocks.push_back(blk);

                Int s11 = Rat(fp.eval_b(x, x) * Rat(maxord)).get_num();
                Int s12 = Rat(blk.b12 * Rat(maxord)).get_num();
                Int s22 = Rat(fp.eval_b(z, z) * Rat(maxord)).get_num();
                Int det = s11 * s22 - s12 * s12;
                Int det_inv;
                if (mpz_invert(det_inv.get_mpz_t(), det.get_mpz_t(), maxord.get_mpz_t()) == 0)
                    throw std::logic_error("split_blocks: pair block not invertible");
                std::vector<IntVec> next;
                for (size_t j = 0; j < gens.size(); ++j) {
                    if (static_cast<int>(j) == x_idx || static_cast<int>(j) == z_idx) continue;
                    Int r1 = Rat(fp.eval_b(x, gens[j]) * Rat(maxord)).get_num();
                    Int r2 = Rat(fp.eval_b(z, gens[j]) * Rat(maxord)).get_num();
                    Int alpha = det_inv * (s22 * r1 - s12 * r2);
                    Int beta = det_inv * (s11 * r2 - s12 * r1);
                    mpz_mod(alpha.get_mpz_t(), alpha.get_mpz_t(), maxord.get_mpz_t());
                    mpz_mod(beta.get_mpz_t(), beta.get_mpz_t(), maxord.get_mpz_t());
                    IntVec w = add_scaled(gens[j], -alpha, x);
                    w = add_scaled(w, -beta, z);
                    next.push_back(std::move(w));
                }
                gens = std::move(next);
                continue;
            }
        }

        // Rank-1 split at gens[xi].
        IntVec x = gens[xi];
        Block blk;
        blk.scale = a;
        blk.q1 = fp.eval_q(x);
        blocks.push_back(blk);
        Int u = Rat(fp.eval_b(x, x) * Rat(maxord)).get_num();
        Int u_inv;
        if (mpz_invert(u_inv.get_mpz_t(), u.get_mpz_t(), maxord.get_mpz_t()) == 0)
            throw std::logic_error("split_blocks: diagonal not invertible");
        std::vector<IntVec> next;
        for (size_t j = 0; j < gens.size(); ++j) {
            if (static_cast<int>(j) == xi) continue;
            Int s = Rat(fp.eval_b(x, gens[j]) * Rat(maxord)).get_num();
            Int c = s * u_inv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), maxord.get_mpz_t());
            next.push_back(add_scaled(gens[j], -c, x));
        }
        gens = std::move(next);
    }
    return blocks;
}

// Collapse the blocks of one prime into per-scale constituents.
std::vector<GenusComponent> aggregate(const Int& p, const std::vector<Block>& blocks) {
    struct Agg {
        int rank = 0;
        Int det = 1;  // unit part: mod p (odd p) or mod 8 (p = 2)
        bool has_odd = false;
        int oddity = 0;
    };
    std::map<int, Agg> per_scale;
    for (const Block& b : blocks) {
        Agg& A = per_scale[b.scale];
        Int level = 1;
        for (int i = 0; i < b.scale; ++i) level *= p;
        if (!b.pair) {
            Int theta = Rat(b.q1 * Rat(level)).get_num();  // numerator of q over p^k
            A.rank += 1;
            if (p == 2) {
                A.has_odd = true;
                A.oddity = (A.oddity + static_cast<int>(mpz_fdiv_ui(theta.get_mpz_t(), 8))) % 8;
                A.det = A.det * theta;
            } else {
                A.det = A.det * theta;
            }
        } else {
            // scaled Gram [[2v, u], [u, 2w]], det = 4vw - u^2 = -1 or 3 mod 8
            Int v = Rat(b.q1 * Rat(level)).get_num() / 2;
            Int w = Rat(b.q2 * Rat(level)).get_num() / 2;
            A.rank += 2;
            bool v_type = (v % 2 != 0) && (w % 2 != 0);
            if (v_type) {
                A.det = A.det * 3;
                A.oddity = (A.oddity + 4) % 8;
            } else {
                A.det = A.det * 7;
            }
        }
    }
    std::vector<GenusComponent> comps;
    for (auto& [scale, A] : per_scale) {
        GenusComponent c;
        c.prime = p;
        c.scale = scale;
        c.rank = A.rank;
        if (p == 2) {
            unsigned long d = mpz_fdiv_ui(A.det.get_mpz_t(), 8);
            c.sign = (d == 1 || d == 7) ? +1 : -1;
            c.type2 = !A.has_odd;
            c.oddity = A.has_odd ? A.oddity : 0;
        } else {
            c.sign = mpz_legendre(A.det.get_mpz_t(), p.get_mpz_t());
            c.type2 = false;
            c.oddity = 0;
        }
        comps.push_back(c);
    }
    return comps;
}

// ----- canonicalization of the 2-adic part -----

struct TwoState {
    // (scale, rank, type2, sign(0 = +), oddity) ascending in scale
    std::vector<std::array<int, 5>> v;
    bool operator<(const TwoState& o) const { return v < o.v; }
    bool operator==(const TwoState& o) const { return v == o.v; }
};

// Rewriting moves between presentations of the same form:
//  - lift: at scale 2 the unit theta of an odd block is only defined mod 4,
//    so sign and oddity trade as (flip, t+4);
//  - walk: adjacent scales trade signs, each type-I oddity moving by 4;
//  - transfer: adjacent type-I scales trade oddity 2 against 6 with both
//    signs flipping (the x3 variant of the walk).
std::vector<TwoState> neighbors(const TwoState& s) {
    std::vector<TwoState> out;
    const int n = static_cast<int>(s.v.size());
    auto flip = [](std::array<int, 5>& c) { c[3] ^= 1; };
    for (int i = 0; i < n; ++i) {
        if (s.v[i][0] == 1 && !s.v[i][2]) {
            TwoState t = s;
            flip(t.v[i]);
            t.v[i][4] = (t.v[i][4] + 4) % 8;
            out.push_back(std::move(t));
            if (s.v[i][1] >= 3) {
                // Rank >= 3 admits a splitting with a II-pair, and a V-pair
                // plus an odd block re-splits as three odd blocks (e.g.
                // v + w_3 = w_1 + w_1 + w_1), moving the oddity by 4 alone.
                TwoState t2 = s;
                t2.v[i][4] = (t2.v[i][4] + 4) % 8;
                out.push_back(std::move(t2));
            }
        }
        if (i + 1 < n && s.v[i + 1][0] == s.v[i][0] + 1) {
            {
                TwoState t = s;
                flip(t.v[i]);
                flip(t.v[i + 1]);
                if (!t.v[i][2]) t.v[i][4] = (t.v[i][4] + 4) % 8;
                if (!t.v[i + 1][2]) t.v[i + 1][4] = (t.v[i + 1][4] + 4) % 8;
                out.push_back(std::move(t));
            }
            if (!s.v[i][2] && !s.v[i + 1][2]) {
                for (int d : {2, 6}) {
                    TwoState t = s;
                    flip(t.v[i]);
                    flip(t.v[i + 1]);
                    t.v[i][4] = (t.v[i][4] + d) % 8;
                    t.v[i + 1][4] = (t.v[i + 1][4] + 8 - d) % 8;
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

TwoState minimize(const TwoState& start) {
    std::set<TwoState> seen{start};
    std::vector<TwoState> frontier{start};
    TwoState best = start;
    while (!frontier.empty()) {
        std::vector<TwoState> next;
        for (const TwoState& s : frontier)
            for (TwoState& t : neighbors(s)) {
                if (seen.insert(t).second) {
                    if (t < best) best = t;
                    next.push_back(std::move(t));
                }
            }
        frontier = std::move(next);
    }
    return best;
}

}  // namespace

GenusSymbol canonicalize(const GenusSymbol& s) {
    std::vector<GenusComponent> out;
    TwoState two;
    for (const GenusComponent& c : s.components()) {
        if (c.prime == 2)
            two.v.push_back({c.scale, c.rank, c.type2 ? 1 : 0, c.sign > 0 ? 0 : 1, c.type2 ? 0 : c.oddity});
        else
            out.push_back(c);
    }
    TwoState best = minimize(two);
    for (const auto& c : best.v) {
        GenusComponent g;
        g.prime = 2;
        g.scale = c[0];
        g.rank = c[1];
        g.type2 = c[2] != 0;
        g.sign = c[3] == 0 ? +1 : -1;
        g.oddity = g.type2 ? 0 : c[4];
        out.push_back(g);
    }
    return GenusSymbol(std::move(out));
}

GenusSymbol genus_symbol(const FiniteQuadraticForm& q) {
    std::vector<GenusComponent> comps;
    for (const Int& p : support_primes(q)) {
        FiniteQuadraticForm fp = p_primary_part(q, p);
        std::vector<Block> blocks = split_blocks(fp, p);
        for (GenusComponent& c : aggregate(p, blocks)) comps.push_back(c);
    }
    return canonicalize(GenusSymbol(std::move(comps)));
}

bool canonical_equal(const GenusSymbol& a, const GenusSymbol& b) { return canonicalize(a) == canonicalize(b); }

GenusSymbol parse_genus_symbol(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("genus symbol parse error at position " + std::to_string(pos) + ": " + msg);
    };
    auto parse_int = [&]() -> long {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return std::stol(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        ++pos;
        skip_ws();
        if (pos != text.size()) fail("trailing characters after trivial symbol");
        return GenusSymbol();
    }

    std::vector<GenusComponent> comps;
    for (;;) {
        GenusComponent c;
        long level = parse_int();
        if (level < 2) fail("level must be a prime power >= 2");
        // factor as p^k
        long p = 2;
        while (level % p != 0) ++p;
        long l = level;
        int scale = 0;
        while (l % p == 0) {
            l /= p;
            ++scale;
        }
        if (l != 1) fail("level must be a prime power");
        c.prime = p;
        c.scale = scale;

        skip_ws();
        bool has_sub = pos < text.size() && text[pos] == '_';
        if (has_sub) {
            ++pos;
            skip_ws();
            bool braced = pos < text.size() && text[pos] == '{';
            if (braced) ++pos;
            skip_ws();
            if (pos + 1 < text.size() && text[pos] == 'I' && text[pos + 1] == 'I') {
                pos += 2;
                c.type2 = true;
            } else {
                long t = parse_int();
                c.oddity = static_cast<int>(((t % 8) + 8) % 8);
            }
            skip_ws();
            if (braced) {
                if (pos >= text.size() || text[pos] != '}') fail("expected '}'");
                ++pos;
            }
        }
        if (c.prime == 2 && !has_sub) fail("2-adic component needs an oddity or II subscript");
        if (c.prime != 2 && has_sub) fail("odd-prime component cannot carry a subscript");
        if (c.type2 && c.prime != 2) fail("type II subscript requires p = 2");

        skip_ws();
        if (pos >= text.size() || text[pos] != '^') fail("expected '^'");
        ++pos;
        skip_ws();
        bool braced = pos < text.size() && text[pos] == '{';
        if (braced) ++pos;
        skip_ws();
        if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) fail("expected sign");
        c.sign = text[pos] == '+' ? +1 : -1;
        ++pos;
        long rank = parse_int();
        if (rank < 1) fail("rank must be positive");
        c.rank = static_cast<int>(rank);
        skip_ws();
        if (braced) {
            if (pos >= text.size() || text[pos] != '}') fail("expected '}'");
            ++pos;
        }
        comps.push_back(c);
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ',') fail("expected ','");
        ++pos;
    }
    return GenusSymbol(std::move(comps));
}

bool is_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    if (a.orders() != b.orders()) return false;
    if (a.group_order() <= kDefaultGaussBound && gauss_signature(a) != gauss_signature(b)) return false;
    return canonical_equal(genus_symbol(a), genus_symbol(b));
}

}  // namespace k3lat
