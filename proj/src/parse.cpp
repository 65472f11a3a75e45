#include "dbx/parse.hpp"

#include <cctype>
#include <limits>

namespace dbx {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            throw parse_error(std::string("expected ") + what, pos);
    }

    // Digits only. Returns the literal text.
    std::string read_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw parse_error("expected an unsigned integer", pos);
        return std::string(text.substr(start, pos - start));
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;
    bool allow_sqrt;

    ast::NodePtr make(ast::Kind k, std::size_t pos) {
        auto n = std::make_unique<ast::Node>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    ast::NodePtr expr() {
        auto lhs = term();
        for (;;) {
            std::size_t at = lex.pos;
            if (lex.accept('+')) {
                auto n = make(ast::Kind::Add, at);
                n->lhs = std::move(lhs);
                n->rhs = term();
                lhs = std::move(n);
            } else if (lex.accept('-')) {
                auto n = make(ast::Kind::Sub, at);
                n->lhs = std::move(lhs);
                n->rhs = term();
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    ast::NodePtr term() {
        auto lhs = factor();
        while (true) {
            std::size_t at = lex.pos;
            if (!lex.accept('*'))
                return lhs;
            auto n = make(ast::Kind::Mul, at);
            n->lhs = std::move(lhs);
            n->rhs = factor();
            lhs = std::move(n);
        }
    }

    ast::NodePtr factor() {
        auto b = base();
        lex.skip_ws();
        if (lex.accept('^')) {
            std::size_t at = lex.pos;
            if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                throw parse_error("exponent must be a non-negative integer", lex.pos);
            std::string digits = lex.read_uint();
            unsigned long e = 0;
            try {
                e = std::stoul(digits);
            } catch (const std::out_of_range&) {
                throw parse_error("exponent too large", at);
            }
            if (e > std::numeric_limits<unsigned>::max())
                throw parse_error("exponent too large", at);
            auto n = make(ast::Kind::Pow, at);
            n->exponent = static_cast<unsigned>(e);
            n->lhs = std::move(b);
            return n;
        }
        return b;
    }

    ast::NodePtr base() {
        std::size_t at = lex.pos;
        char c = lex.peek();
        at = lex.pos;
        if (c == '(') {
            ++lex.pos;
            auto inner = expr();
            lex.expect(')', "')'");
            return inner;
        }
        if (c == '-') {
            ++lex.pos;
            auto n = make(ast::Kind::Neg, at);
            n->lhs = factor();
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.read_uint();
            std::string den = "1";
            if (lex.accept('/'))
                den = lex.read_uint();
            auto n = make(ast::Kind::Number, at);
            n->value = Rational(Integer(num), Integer(den));
            n->value.canonicalize();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident = lex.read_ident();
            if (ident == "sqrt" && lex.peek() == '(') {
                if (!allow_sqrt)
                    throw parse_error("sqrt is not allowed here", at);
                ++lex.pos;
                auto n = make(ast::Kind::Sqrt, at);
                n->lhs = expr();
                lex.expect(')', "')'");
                return n;
            }
            auto n = make(ast::Kind::Variable, at);
            n->name = std::move(ident);
            return n;
        }
        throw parse_error(c == '\0' ? "unexpected end of input"
                                    : std::string("unexpected character '") + c + "'",
                          at);
    }
};

} // namespace

ast::NodePtr parse_expression(std::string_view text, bool allow_sqrt) {
    Parser p{Lexer{text}, allow_sqrt};
    auto n = p.expr();
    if (!p.lex.eof())
        throw parse_error(std::string("unexpected character '") + p.lex.peek() + "'",
                          p.lex.pos);
    return n;
}

Poly eval_poly(const ast::Node& node, const std::set<std::string>& allowed_vars) {
    switch (node.kind) {
    case ast::Kind::Number:
        return Poly(node.value);
    case ast::Kind::Variable:
        if (!allowed_vars.count(node.name))
            throw parse_error("unknown variable '" + node.name + "'", node.pos);
        if (node.name == "x")
            return Poly::var(Var::x);
        if (node.name == "y")
            return Poly::var(Var::y);
        throw parse_error("variable '" + node.name + "' has no polynomial meaning here",
                          node.pos);
    case ast::Kind::Add:
        return eval_poly(*node.lhs, allowed_vars) + eval_poly(*node.rhs, allowed_vars);
    case ast::Kind::Sub:
        return eval_poly(*node.lhs, allowed_vars) - eval_poly(*node.rhs, allowed_vars);
    case ast::Kind::Neg:
        return -eval_poly(*node.lhs, allowed_vars);
    case ast::Kind::Mul:
        return eval_poly(*node.lhs, allowed_vars) * eval_poly(*node.rhs, allowed_vars);
    case ast::Kind::Pow:
        return pow(eval_poly(*node.lhs, allowed_vars), node.exponent);
    case ast::Kind::Sqrt:
        throw parse_error("sqrt is not allowed here", node.pos);
    }
    throw parse_error("malformed expression", node.pos);
}

Poly parse_polynomial(std::string_view text, const std::set<std::string>& allowed_vars) {
    auto n = parse_expression(text, /*allow_sqrt=*/false);
    return eval_poly(*n, allowed_vars);
}

} // namespace dbx
