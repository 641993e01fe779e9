#include <cctype>

#include "ufx/error.hpp"
#include "ufx/formula.hpp"

namespace ufx {

namespace {

struct Token {
    enum class Kind { Ident, LParen, RParen, LBracket, RBracket, Comma, And, Or, Implies, Not, Eq, Neq, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        std::size_t l = line, cl = col;
        auto emit = [&](Token::Kind k, std::size_t len) {
            out.push_back({k, std::string(src.substr(i, len)), l, cl});
            advance(len);
        };
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            emit(Token::Kind::Ident, j - i);
            continue;
        }
        switch (c) {
        case '(': emit(Token::Kind::LParen, 1); continue;
        case ')': emit(Token::Kind::RParen, 1); continue;
        case '[': emit(Token::Kind::LBracket, 1); continue;
        case ']': emit(Token::Kind::RBracket, 1); continue;
        case ',': emit(Token::Kind::Comma, 1); continue;
        case '&': emit(Token::Kind::And, 1); continue;
        case '|': emit(Token::Kind::Or, 1); continue;
        case '~': emit(Token::Kind::Not, 1); continue;
        case '=': emit(Token::Kind::Eq, 1); continue;
        default: break;
        }
        if (src.substr(i, 2) == "->") {
            emit(Token::Kind::Implies, 2);
            continue;
        }
        if (src.substr(i, 2) == "!=") {
            emit(Token::Kind::Neq, 2);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

bool is_keyword(const std::string& s) {
    return s == "forall" || s == "exists" || s == "Uforall" || s == "Uexists";
}

class Parser {
public:
    Parser(std::string_view text, const Vocabulary& vocab) : tokens_(tokenize(text)), vocab_(vocab) {}

    Formula parse() {
        Formula f = implication();
        if (peek().kind != Token::Kind::End)
            fail("unexpected '" + peek().text + "' after formula");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k)
            return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind k, const char* what) {
        if (!accept(k))
            fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(t.kind == Token::Kind::End ? what + " at end of input" : what, t.line, t.column);
    }

    std::string variable_name() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident || is_keyword(t.text))
            fail("expected variable");
        if (vocab_.declares(t.text))
            fail("symbol " + t.text + " cannot be used as a variable");
        return take().text;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (accept(Token::Kind::Implies))
            return Formula::implication(std::move(lhs), implication());
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (accept(Token::Kind::Or))
            f = Formula::disjunction(std::move(f), conjunction());
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept(Token::Kind::And))
            f = Formula::conjunction(std::move(f), unary());
        return f;
    }

    Formula unary() {
        const Token& t = peek();
        if (accept(Token::Kind::Not))
            return Formula::negation(unary());
        if (accept(Token::Kind::LParen)) {
            Formula f = implication();
            expect(Token::Kind::RParen, "')'");
            return f;
        }
        if (t.kind == Token::Kind::Ident && is_keyword(t.text))
            return quantified();
        return atom();
    }

    Formula quantified() {
        std::string kw = take().text;
        std::string uf;
        if (kw == "Uforall" || kw == "Uexists") {
            expect(Token::Kind::LBracket, "'['");
            if (peek().kind != Token::Kind::Ident || is_keyword(peek().text))
                fail("expected ultrafilter parameter name");
            uf = take().text;
            expect(Token::Kind::RBracket, "']'");
        }
        std::string var = variable_name();
        Formula body = implication();
        if (kw == "forall")
            return Formula::forall(std::move(var), std::move(body));
        if (kw == "exists")
            return Formula::exists(std::move(var), std::move(body));
        if (kw == "Uforall")
            return Formula::uf_forall(std::move(uf), std::move(var), std::move(body));
        return Formula::uf_exists(std::move(uf), std::move(var), std::move(body));
    }

    Formula atom() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident)
            fail(t.kind == Token::Kind::End ? "expected formula" : "unexpected '" + t.text + "'");
        if (vocab_.find_predicate(t.text)) {
            Token name = take();
            expect(Token::Kind::LParen, "'(' after predicate");
            std::vector<Term> args = arguments();
            try {
                return Formula::predicate(vocab_, name.text, std::move(args));
            } catch (const SemanticError& e) {
                throw SemanticError("line " + std::to_string(name.line) + ", column " +
                                    std::to_string(name.column) + ": " + e.what());
            }
        }
        Term lhs = term();
        if (accept(Token::Kind::Eq))
            return Formula::equal(std::move(lhs), term());
        if (accept(Token::Kind::Neq))
            return Formula::negation(Formula::equal(std::move(lhs), term()));
        fail("expected '=' or '!=' after term");
    }

    std::vector<Term> arguments() {
        std::vector<Term> args;
        args.push_back(term());
        while (accept(Token::Kind::Comma))
            args.push_back(term());
        expect(Token::Kind::RParen, "')'");
        return args;
    }

    Term term() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident || is_keyword(t.text))
            fail("expected term");
        if (vocab_.find_function(t.text)) {
            Token name = take();
            expect(Token::Kind::LParen, "'(' after function symbol");
            std::vector<Term> args = arguments();
            try {
                return Term::apply(vocab_, name.text, std::move(args));
            } catch (const SemanticError& e) {
                throw SemanticError("line " + std::to_string(name.line) + ", column " +
                                    std::to_string(name.column) + ": " + e.what());
            }
        }
        if (vocab_.find_predicate(t.text))
            fail("predicate " + t.text + " used as a term");
        if (peek().kind == Token::Kind::Ident && tokens_[pos_ + 1].kind == Token::Kind::LParen)
            throw SemanticError("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                                ": unknown symbol " + t.text);
        return Term::variable(take().text);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Vocabulary& vocab_;
};

} // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
    Formula f = Parser(text, vocab).parse();
    check_bindings(f);
    return f;
}

} // namespace ufx
