#pragma once

#include <memory>

#include "k3lat/embeddings.hpp"

namespace k3lat::dsl {

// AST of the lattice expression language:
//   expr := term { ("+"|"⊕") term }
//   term := [ count ] atom [ "(" nonzero-int ")" ]
//   atom := "U" | ("A"|"D"|"E") int | "<" ints ">" | "[[..],[..]]"
//         | "perp" "(" expr ";" expr ")"
// with "0" accepted as a complete expression for the rank-0 lattice.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Sum, Repeat, Scale, Atom, Diag, Gram, Perp, Zero };
    Kind kind;
    std::vector<ExprPtr> children;  // Sum: parts; Repeat/Scale: {child}; Perp: {sub, ambient}
    long count = 0;                 // Repeat
    Int scale = 0;                  // Scale
    char series = 0;                // 'U', 'A', 'D', 'E'
    int param = 0;                  // A/D/E index
    IntVec diag;                    // Diag entries
    IntMatrix gram;                 // Gram literal
};

class ParseError : public std::runtime_error {
public:
    ParseError(size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

ExprPtr parse(const std::string& text);

// Canonical text form; parse(render(e)) is structurally equal to e.
std::string render(const ExprPtr& e);

bool equal(const ExprPtr& a, const ExprPtr& b);

bool contains_perp(const ExprPtr& e);

// Perp-free expressions yield a concrete Lattice; expressions with a perp
// node evaluate at genus level.
LatticeLike evaluate(const ExprPtr& e);

// parse + evaluate
LatticeLike evaluate(const std::string& text);

}  // namespace k3lat::dsl
