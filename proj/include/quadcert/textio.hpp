#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quadcert/polynomial.hpp"

namespace quadcert {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

// Hand-rolled lexer shared by the polynomial syntax and the session
// language. Punctuation: ( ) [ ] , ; = ^ * + - / :
class Lexer {
public:
    explicit Lexer(const std::string& text);

    const Token& peek(std::size_t ahead = 0) const;
    Token next();
    bool at_end() const { return peek().kind == Token::Kind::End; }

    // Consume a specific punctuation/identifier or fail with a diagnostic.
    Token expect_punct(const std::string& p);
    Token expect_ident();
    Token expect_int();
    bool try_punct(const std::string& p);
    [[noreturn]] void error(const std::string& msg) const;

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Expression tree for the textual polynomial syntax: integer/rational
// literals, variables (or bound names), + - * ^ and unary minus.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Literal, Var, Add, Sub, Mul, Neg, Pow };
    Kind kind = Kind::Literal;
    Rational value;    // Literal
    std::string name;  // Var
    ExprPtr a, b;      // operands (Neg uses a; Pow uses a and exponent)
    long exponent = 0;
};

ExprPtr parse_expression(Lexer& lex);
std::string print_expression(const ExprPtr& e);
bool expr_equal(const ExprPtr& x, const ExprPtr& y);

// Evaluate with identifiers resolving first to ring variables, then to
// bound polynomial names.
Polynomial eval_expression(const ExprPtr& e, const RingDescriptor& ring,
                           const std::map<std::string, Polynomial>& bindings = {});

// Parse a standalone polynomial (no bindings). The entire string must be
// consumed.
Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring);

}  // namespace quadcert
