#include "k3lat/lattice.hpp"

#include <utility>

namespace k3lat {

Lattice::Lattice(IntMatrix gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram matrix not symmetric");
    for (int i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Lattice: Gram matrix not even");
    det_ = ::k3lat::determinant(gram_);
    if (rank() > 0 && det_ == 0) throw std::invalid_argument("Lattice: degenerate Gram matrix");
    if (rank() == 0) det_ = 1;
    sig_ = rank() > 0 ? symmetric_signature(gram_) : Signature{0, 0};
}

RatMatrix Lattice::dual_gram() const {
    if (rank() == 0) return RatMatrix(0, 0);
    return rational_inverse(gram_);
}

Lattice Lattice::with_label(std::string label) const {
    Lattice l = *this;
    l.label_ = std::move(label);
    return l;
}

namespace lattices {

namespace {

Lattice dynkin(int n, const std::vector<std::pair<int, int>>& edges, const std::string& label) {
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = 1;
        g(b - 1, a - 1) = 1;
    }
    return Lattice(std::move(g), label);
}

}  // namespace

Lattice A(int n) {
    if (n < 1) throw std::invalid_argument("A(n): n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return dynkin(n, edges, "A" + std::to_string(n));
}

Lattice D(int n) {
    if (n < 4) throw std::invalid_argument("D(n): n >= 4 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 2, n);
    return dynkin(n, edges, "D" + std::to_string(n));
}

Lattice E(int n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E(n): n in {6,7,8} required");
    std::vector<std::pair<int, int>> edges = {{1, 3}, {2, 4}, {3, 4}};
    for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
    return dynkin(n, edges, "E" + std::to_string(n));
}

Lattice U() {
    IntMatrix g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return Lattice(std::move(g), "U");
}

Lattice rank1(const Int& a) {
    if (a == 0) throw std::invalid_argument("rank1: entry must be nonzero");
    if (a % 2 != 0) throw std::invalid_argument("rank1: entry must be even");
    IntMatrix g(1, 1);
    g(0, 0) = a;
    return Lattice(std::move(g), "<" + a.get_str() + ">");
}

Lattice diagonal(const IntVec& entries) {
    const int n = static_cast<int>(entries.size());
    IntMatrix g(n, n);
    std::string label = "<";
    for (int i = 0; i < n; ++i) {
        if (entries[i] == 0) throw std::invalid_argument("diagonal: entries must be nonzero");
        if (entries[i] % 2 != 0) throw std::invalid_argument("diagonal: entries must be even");
        g(i, i) = entries[i];
        label += entries[i].get_str();
        if (i + 1 < n) label += ",";
    }
    label += ">";
    return Lattice(std::move(g), label);
}

Lattice from_gram(const IntMatrix& gram, std::string label) { return Lattice(gram, std::move(label)); }

Lattice k3() {
    Lattice l = direct_sum({U(), U(), U(), E(8), E(8)});
    return l.with_label("3U+2E8");
}

}  // namespace lattices

Lattice rescale(const Lattice& l, const Rat& t) {
    if (t == 0) throw std::invalid_argument("rescale: factor must be nonzero");
    RatMatrix g(l.gram());
    IntMatrix scaled(l.rank(), l.rank());
    for (int i = 0; i < l.rank(); ++i)
        for (int j = 0; j < l.rank(); ++j) {
            Rat x = g(i, j) * t;
            if (x.get_den() != 1) throw std::invalid_argument("rescale: result not integral");
            scaled(i, j) = x.get_num();
        }
    std::string label = l.label().empty() ? "" : l.label() + "(" + t.get_str() + ")";
    return Lattice(std::move(scaled), std::move(label));
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
    IntMatrix g = parts[0].gram();
    std::string label = parts[0].label();
    for (size_t i = 1; i < parts.size(); ++i) {
        g = IntMatrix::block_diag(g, parts[i].gram());
        label += "+" + parts[i].label();
    }
    return Lattice(std::move(g), std::move(label));
}

LatticeInvariants invariants(const Lattice& l) {
    return LatticeInvariants{l.rank(), l.signature(), l.determinant(), true, l.is_unimodular(), l.is_hyperbolic()};
}

}  // namespace k3lat
