#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "uq/autos.hpp"
#include "uq/rewrite.hpp"

namespace uq {

struct Token {
    enum class Kind { Generator, Number, QSymbol, Name, Op, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t position;  // 0-based offset into the input
};

// Lexical errors carry the offending position.
std::vector<Token> tokenize(const std::string& input);

// Abstract syntax for element expressions.
struct Expression {
    enum class Node { Add, Sub, Neg, Mul, Div, Pow, Number, Q, Gen, Name };
    Node node;
    std::vector<std::unique_ptr<Expression>> children;
    Rational number;     // Node::Number
    Generator gen{};     // Node::Gen
    std::string name;    // Node::Name
    long exponent = 0;   // Node::Pow
};

// Grammar (loosest to tightest): '+'/'-' < unary '-' < '*'/'/' < '^'.
// Multiplication is always explicit; pow exponents are integers.
std::unique_ptr<Expression> parse(const std::vector<Token>& tokens);

// Known named constants, e.g. from structure::named.
using NameTable = std::map<std::string, AlgElement>;

// Evaluates the tree in U_q(g) and applies normal_form. '/' and negative
// exponents require scalar (or K-monomial) operands.
AlgElement elaborate(const RewriteSystem& rs, const NameTable& names,
                     const Expression& expr);

AlgElement parse_element(const RewriteSystem& rs, const NameTable& names,
                         const std::string& text);

// Deterministic rendering; elaborate(parse(render(x))) == x for canonical x.
std::string render(const AlgElement& x);

// Automorphism definition file: lines "E<i> -> <expression>", '#' comments
// and blank lines ignored. Every E_i must receive exactly one image.
EndoSpec parse_endo_file(const RewriteSystem& rs, const NameTable& names,
                         std::istream& in);

}  // namespace uq
