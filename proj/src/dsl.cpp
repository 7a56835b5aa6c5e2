#include "k3lat/dsl.hpp"

#include <cctype>
#include <sstream>

namespace k3lat::dsl {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_plus() {
        skip_ws();
        if (pos < s.size() && s[pos] == '+') {
            ++pos;
            return true;
        }
        // UTF-8 encoded direct sum sign
        if (pos + 2 < s.size() && static_cast<unsigned char>(s[pos]) == 0xE2 &&
            static_cast<unsigned char>(s[pos + 1]) == 0x8A && static_cast<unsigned char>(s[pos + 2]) == 0x95) {
            pos += 3;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    Int parse_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t dig = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dig) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    long parse_count() {
        Int c = parse_integer();
        if (c <= 0) fail("multiplicity must be positive");
        if (!c.fits_slong_p()) fail("multiplicity too large");
        return c.get_si();
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> parts{parse_term()};
        while (eat_plus()) parts.push_back(parse_term());
        if (parts.size() == 1) return parts[0];
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Sum;
        e->children = std::move(parts);
        return e;
    }

    ExprPtr parse_term() {
        skip_ws();
        long count = 0;
        if (peek_digit()) count = parse_count();
        ExprPtr atom = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            Int t = parse_integer();
            if (t == 0) fail("scale factor must be nonzero");
            expect(')');
            auto sc = std::make_shared<Expr>();
            sc->kind = Expr::Kind::Scale;
            sc->scale = t;
            sc->children = {atom};
            atom = sc;
        }
        if (count > 0) {
            auto rep = std::make_shared<Expr>();
            rep->kind = Expr::Kind::Repeat;
            rep->count = count;
            rep->children = {atom};
            atom = rep;
        }
        return atom;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected lattice atom");
        char c = s[pos];
        if (c == 'U') {
            ++pos;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Atom;
            e->series = 'U';
            return e;
        }
        if (c == 'A' || c == 'D' || c == 'E') {
            ++pos;
            Int n = parse_integer();
            if (n < 1 || !n.fits_sint_p()) fail("series index out of range");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Atom;
            e->series = c;
            e->param = static_cast<int>(n.get_si());
            return e;
        }
        if (c == '<') {
            ++pos;
            IntVec entries{parse_integer()};
            while (eat(',')) entries.push_back(parse_integer());
            expect('>');
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Diag;
            e->diag = std::move(entries);
            return e;
        }
        if (c == '[') {
            return parse_gram();
        }
        if (s.compare(pos, 4, "perp") == 0) {
            pos += 4;
            expect('(');
            ExprPtr sub = parse_expr();
            expect(';');
            ExprPtr ambient = parse_expr();
            expect(')');
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Perp;
            e->children = {sub, ambient};
            return e;
        }
        fail("expected lattice atom");
    }

    ExprPtr parse_gram() {
        expect('[');
        std::vector<IntVec> rows;
        do {
            expect('[');
            IntVec row{parse_integer()};
            while (eat(',')) row.push_back(parse_integer());
            expect(']');
            if (!rows.empty() && rows[0].size() != row.size()) fail("ragged Gram literal");
            rows.push_back(std::move(row));
        } while (eat(','));
        expect(']');
        if (rows.size() != rows[0].size()) fail("Gram literal must be square");
        IntMatrix g(static_cast<int>(rows.size()), static_cast<int>(rows.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j) g(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Gram;
        e->gram = std::move(g);
        return e;
    }
};

}  // namespace

ExprPtr parse(const std::string& text) {
    Parser p(text);
    p.skip_ws();
    if (p.pos < text.size() && text[p.pos] == '0') {
        ++p.pos;
        p.skip_ws();
        if (p.pos != text.size()) p.fail("'0' must stand alone");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Zero;
        return e;
    }
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::string render(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Zero:
            return "0";
        case Expr::Kind::Atom:
            if (e->series == 'U') return "U";
            return std::string(1, e->series) + std::to_string(e->param);
        case Expr::Kind::Diag: {
            std::string s = "<";
            for (size_t i = 0; i < e->diag.size(); ++i) {
                s += e->diag[i].get_str();
                if (i + 1 < e->diag.size()) s += ",";
            }
            return s + ">";
        }
        case Expr::Kind::Gram:
            return e->gram.str();
        case Expr::Kind::Scale:
            return render(e->children[0]) + "(" + e->scale.get_str() + ")";
        case Expr::Kind::Repeat:
            return std::to_string(e->count) + render(e->children[0]);
        case Expr::Kind::Perp:
            return "perp(" + render(e->children[0]) + "; " + render(e->children[1]) + ")";
        case Expr::Kind::Sum: {
            std::string s;
            for (size_t i = 0; i < e->children.size(); ++i) {
                s += render(e->children[i]);
                if (i + 1 < e->children.size()) s += "+";
            }
            return s;
        }
    }
    throw std::logic_error("render: unknown node");
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    if (a->count != b->count || a->scale != b->scale || a->series != b->series || a->param != b->param)
        return false;
    if (a->diag != b->diag || a->gram != b->gram) return false;
    if (a->children.size() != b->children.size()) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!equal(a->children[i], b->children[i])) return false;
    return true;
}

bool contains_perp(const ExprPtr& e) {
    if (e->kind == Expr::Kind::Perp) return true;
    for (const ExprPtr& c : e->children)
        if (contains_perp(c)) return true;
    return false;
}

namespace {

LatticeLike combine(std::vector<LatticeLike> parts) {
    bool concrete = true;
    for (const LatticeLike& p : parts)
        if (!is_concrete(p)) concrete = false;
    if (concrete) {
        std::vector<Lattice> ls;
        ls.reserve(parts.size());
        for (LatticeLike& p : parts) ls.push_back(std::get<Lattice>(std::move(p)));
        return direct_sum(ls);
    }
    GenusTriple g;
    g.q = FiniteQuadraticForm();
    for (const LatticeLike& p : parts) {
        Signature s = signature_of(p);
        g.t_plus += s.t_plus;
        g.t_minus += s.t_minus;
        g.q = direct_sum_q(g.q, form_of(p));
    }
    return g;
}

}  // namespace

LatticeLike evaluate(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Zero:
            return Lattice::zero();
        case Expr::Kind::Atom:
            switch (e->series) {
                case 'U':
                    return lattices::U();
                case 'A':
                    return lattices::A(e->param);
                case 'D':
                    return lattices::D(e->param);
                case 'E':
                    return lattices::E(e->param);
            }
            throw std::logic_error("evaluate: unknown series");
        case Expr::Kind::Diag:
            return lattices::diagonal(e->diag);
        case Expr::Kind::Gram:
            return lattices::from_gram(e->gram);
        case Expr::Kind::Scale: {
            LatticeLike inner = evaluate(e->children[0]);
            if (!is_concrete(inner))
                throw std::domain_error("evaluate: cannot rescale a genus-level complement");
            return rescale(std::get<Lattice>(inner), Rat(e->scale));
        }
        case Expr::Kind::Repeat: {
            LatticeLike inner = evaluate(e->children[0]);
            std::vector<LatticeLike> copies(static_cast<size_t>(e->count), inner);
            return combine(std::move(copies));
        }
        case Expr::Kind::Sum: {
            std::vector<LatticeLike> parts;
            parts.reserve(e->children.size());
            for (const ExprPtr& c : e->children) parts.push_back(evaluate(c));
            return combine(std::move(parts));
        }
        case Expr::Kind::Perp: {
            LatticeLike ambient_like = evaluate(e->children[1]);
            if (!is_concrete(ambient_like))
                throw std::domain_error("evaluate: perp ambient must be a concrete lattice");
            const Lattice& ambient = std::get<Lattice>(ambient_like);
            if (!ambient.is_unimodular())
                throw std::domain_error("evaluate: perp ambient must be unimodular");
            LatticeLike sub = evaluate(e->children[0]);
            return complement_genus(sub, ambient);
        }
    }
    throw std::logic_error("evaluate: unknown node");
}

LatticeLike evaluate(const std::string& text) { return evaluate(parse(text)); }

}  // namespace k3lat::dsl
