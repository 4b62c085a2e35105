#include "symhermite/parser.hpp"

#include <cctype>
#include <ostream>

namespace symhermite {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t at_ = 0;
    Token tok_;

    void advance() {
        while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_])))
            ++at_;
        std::size_t start = at_;
        if (at_ == text_.size()) {
            tok_ = {TokKind::End, "", start};
            return;
        }
        char c = text_[at_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_])))
                ++at_;
            tok_ = {TokKind::Number, text_.substr(start, at_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (at_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_'))
                ++at_;
            tok_ = {TokKind::Ident, text_.substr(start, at_ - start), start};
            return;
        }
        ++at_;
        switch (c) {
            case '+': tok_ = {TokKind::Plus, "+", start}; return;
            case '-': tok_ = {TokKind::Minus, "-", start}; return;
            case '*': tok_ = {TokKind::Star, "*", start}; return;
            case '^': tok_ = {TokKind::Caret, "^", start}; return;
            case '/': tok_ = {TokKind::Slash, "/", start}; return;
            case '(': tok_ = {TokKind::LParen, "(", start}; return;
            case ')': tok_ = {TokKind::RParen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
};

class Parser {
public:
    Parser(const std::string& text, const VariableSet& vars,
           const std::map<std::string, std::string>& aliases)
        : lex_(text), vars_(vars), aliases_(aliases) {}

    Polynomial run() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::End)
            throw ParseError("unexpected token '" + t.text + "'", t.pos);
        return p;
    }

private:
    Lexer lex_;
    const VariableSet& vars_;
    const std::map<std::string, std::string>& aliases_;

    Polynomial expr() {
        bool neg = false;
        if (lex_.peek().kind == TokKind::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            neg = true;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            TokKind k = lex_.peek().kind;
            if (k == TokKind::Plus) {
                lex_.take();
                acc += term();
            } else if (k == TokKind::Minus) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == TokKind::Star) {
            lex_.take();
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (lex_.peek().kind != TokKind::Caret) return base;
        lex_.take();
        Token t = lex_.peek();
        if (t.kind != TokKind::Number) throw ParseError("expected exponent", t.pos);
        lex_.take();
        long e = 0;
        try {
            e = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.pos);
        }
        if (e > 100000) throw ParseError("exponent out of range", t.pos);
        return pow(base, static_cast<int>(e));
    }

    Polynomial primary() {
        Token t = lex_.peek();
        switch (t.kind) {
            case TokKind::Number: {
                lex_.take();
                std::string lit = t.text;
                if (lex_.peek().kind == TokKind::Slash) {
                    lex_.take();
                    Token den = lex_.peek();
                    if (den.kind != TokKind::Number)
                        throw ParseError("expected denominator", den.pos);
                    lex_.take();
                    if (scalar_from_string(den.text) == 0)
                        throw ParseError("zero denominator", den.pos);
                    lit += "/" + den.text;
                }
                return Polynomial::constant(vars_, scalar_from_string(lit));
            }
            case TokKind::Ident: {
                lex_.take();
                std::string name = t.text;
                if (auto it = aliases_.find(name); it != aliases_.end()) name = it->second;
                if (!vars_.index_of(name))
                    throw ParseError("undeclared identifier '" + t.text + "'", t.pos);
                return Polynomial::variable(vars_, name);
            }
            case TokKind::LParen: {
                lex_.take();
                Polynomial inner = expr();
                Token close = lex_.peek();
                if (close.kind != TokKind::RParen)
                    throw ParseError("expected ')'", close.pos);
                lex_.take();
                return inner;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VariableSet& vars,
                            const std::map<std::string, std::string>& aliases) {
    return Parser(text, vars, aliases).run();
}

std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const VariableSet& vs = p.vars();
    std::string out;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        bool neg = sgn(it->coeff) < 0;
        Scalar a = abs(it->coeff);
        std::string mono;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int e = it->mono.exponents[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vs.name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string body;
        if (mono.empty())
            body = scalar_to_string(a);
        else if (a == 1)
            body = mono;
        else
            body = scalar_to_string(a) + "*" + mono;
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << render(p);
}

} // namespace symhermite
