/*
   Copyright 2026 The projconn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Recursive descent parser for polynomial text.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INT)?
//   primary := INT | 'i' | IDENT | '(' expr ')'

#include <algorithm>
#include <cctype>

#include "projconn/errors.hpp"
#include "projconn/polynomial.hpp"

namespace projconn {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t pos;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + std::string(t.text) + "'";
}

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, {}, start};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return {Tok::Int, src_.substr(start, pos_ - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, src_.substr(start, pos_ - start), start};
        }
        ++pos_;
        auto one = [&](Tok k) { return Token{k, src_.substr(start, 1), start}; };
        switch (c) {
            case '+': return one(Tok::Plus);
            case '-': return one(Tok::Minus);
            case '*': return one(Tok::Star);
            case '/': return one(Tok::Slash);
            case '^': return one(Tok::Caret);
            case '(': return one(Tok::LParen);
            case ')': return one(Tok::RParen);
            default: throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

   private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
   public:
    Parser(std::string_view text, const Variables& vars) : lex_(text), vars_(vars) { advance(); }

    Polynomial parse_all() {
        Polynomial p = expr();
        if (cur_.kind != Tok::End) throw ParseError("unexpected " + describe(cur_), cur_.pos);
        return p;
    }

   private:
    void advance() { cur_ = lex_.next(); }

    Polynomial expr() {
        Polynomial acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            advance();
            Polynomial rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            Token op = cur_;
            advance();
            Polynomial rhs = unary();
            if (op.kind == Tok::Star) {
                acc = acc * rhs;
                continue;
            }
            if (!rhs.is_constant()) throw ParseError("division by a non-constant", op.pos);
            if (rhs.is_zero()) throw ParseError("division by zero", op.pos);
            acc = acc.scaled(rhs.constant_term().inverse());
        }
        return acc;
    }

    Polynomial unary() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return -unary();
        }
        if (cur_.kind == Tok::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (cur_.kind != Tok::Caret) return base;
        advance();
        if (cur_.kind == Tok::Minus) throw ParseError("negative exponent", cur_.pos);
        if (cur_.kind != Tok::Int) throw ParseError("expected integer exponent, got " + describe(cur_), cur_.pos);
        if (cur_.text.size() > 9) throw ParseError("exponent too large", cur_.pos);
        unsigned e = static_cast<unsigned>(std::stoul(std::string(cur_.text)));
        advance();
        return base.pow(e);
    }

    Polynomial primary() {
        Token t = cur_;
        switch (t.kind) {
            case Tok::Int: {
                advance();
                return Polynomial::constant(vars_, GaussianRational(mpq_class(mpz_class(std::string(t.text)))));
            }
            case Tok::Ident: {
                advance();
                if (t.text == "i") return Polynomial::constant(vars_, GaussianRational::imaginary_unit());
                auto it = std::find(vars_->begin(), vars_->end(), t.text);
                if (it == vars_->end()) throw ParseError("unknown variable '" + std::string(t.text) + "'", t.pos);
                return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_->begin()));
            }
            case Tok::LParen: {
                advance();
                Polynomial inner = expr();
                if (cur_.kind != Tok::RParen) throw ParseError("expected ')', got " + describe(cur_), cur_.pos);
                advance();
                return inner;
            }
            default: throw ParseError("expected a number, variable or '(', got " + describe(t), t.pos);
        }
    }

    Lexer lex_;
    const Variables& vars_;
    Token cur_{Tok::End, {}, 0};
};

}  // namespace

Polynomial parse(std::string_view text, const Variables& vars) { return Parser(text, vars).parse_all(); }

}  // namespace projconn
