#pragma once

#include "dbx/poly.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace dbx {

// Expression AST shared by the plain-polynomial and parameter-family
// front ends. Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := var | rational | '(' expr ')' | '-' factor | 'sqrt' '(' expr ')'
//   rational := uint ('/' uint)?
// sqrt is only accepted by the family front end.
namespace ast {

struct Node;
using NodePtr = std::unique_ptr<Node>;

enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow, Sqrt };

struct Node {
    Kind kind;
    std::size_t pos = 0; // offset into the source text
    Rational value;      // Number
    std::string name;    // Variable
    unsigned exponent = 0; // Pow
    NodePtr lhs, rhs;
};

} // namespace ast

/// Parses the grammar above; `allow_sqrt` admits sqrt(...) nodes.
/// Throws parse_error with a position on any syntax error.
ast::NodePtr parse_expression(std::string_view text, bool allow_sqrt);

/// Full pipeline for plain polynomials: parse and evaluate over Q[x,y].
/// Variables outside `allowed_vars` are rejected with their position.
Poly parse_polynomial(std::string_view text,
                      const std::set<std::string>& allowed_vars = {"x", "y"});

/// Evaluates an already-parsed tree over Q[x,y] (sqrt rejected).
Poly eval_poly(const ast::Node& node, const std::set<std::string>& allowed_vars);

} // namespace dbx
