#include "ail/parser.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace ail {

ParseError::ParseError(int line, int column, const std::string& message,
                       const std::string& expected)
    : AilError("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
               ": " + message + (expected.empty() ? "" : " (expected " + expected + ")")),
      line_(line), column_(column), expected_(expected) {}

bool is_identifier(const std::string& name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

namespace {

enum class Tok {
    Ident,   // [a-z][a-zA-Z0-9_]*
    Modal,   // one of A I E S C
    Tilde, Amp, Pipe, Arrow, DArrow,
    Plus, Minus, LBracket, RBracket, LBrace, RBrace, LParen, RParen, Comma,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        char c = src_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                id += take();
            return {Tok::Ident, id, line, col};
        }
        switch (c) {
            case 'A': case 'I': case 'E': case 'S': case 'C':
                take();
                return {Tok::Modal, std::string(1, c), line, col};
            case '~': take(); return {Tok::Tilde, "~", line, col};
            case '&': take(); return {Tok::Amp, "&", line, col};
            case '|': take(); return {Tok::Pipe, "|", line, col};
            case '+': take(); return {Tok::Plus, "+", line, col};
            case '[': take(); return {Tok::LBracket, "[", line, col};
            case ']': take(); return {Tok::RBracket, "]", line, col};
            case '{': take(); return {Tok::LBrace, "{", line, col};
            case '}': take(); return {Tok::RBrace, "}", line, col};
            case '(': take(); return {Tok::LParen, "(", line, col};
            case ')': take(); return {Tok::RParen, ")", line, col};
            case ',': take(); return {Tok::Comma, ",", line, col};
            case '-':
                take();
                if (pos_ < src_.size() && src_[pos_] == '>') {
                    take();
                    return {Tok::Arrow, "->", line, col};
                }
                return {Tok::Minus, "-", line, col};
            case '<':
                take();
                if (pos_ + 1 < src_.size() && src_[pos_] == '-' && src_[pos_ + 1] == '>') {
                    take();
                    take();
                    return {Tok::DArrow, "<->", line, col};
                }
                throw ParseError(line, col, "stray '<'", "'<->'");
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'", "");
        }
    }

private:
    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            take();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { advance(); }

    FormulaPtr run() {
        FormulaPtr f = parse_iff();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        std::string found = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
        throw ParseError(cur_.line, cur_.col, "unexpected " + found, expected);
    }

    void advance() { cur_ = lexer_.next(); }

    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) fail(what);
        advance();
    }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_imp();
        while (cur_.kind == Tok::DArrow) {
            advance();
            f = make_iff(f, parse_imp());
        }
        return f;
    }

    FormulaPtr parse_imp() {
        FormulaPtr f = parse_or();
        if (cur_.kind == Tok::Arrow) {
            advance();
            return make_implies(f, parse_imp());
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (cur_.kind == Tok::Pipe) {
            advance();
            f = make_or(f, parse_and());
        }
        return f;
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (cur_.kind == Tok::Amp) {
            advance();
            f = make_and(f, parse_unary());
        }
        return f;
    }

    std::string parse_bracketed_agent() {
        expect(Tok::LBracket, "'['");
        if (cur_.kind != Tok::Ident) fail("agent name");
        std::string agent = cur_.text;
        advance();
        expect(Tok::RBracket, "']'");
        return agent;
    }

    FormulaPtr parse_unary() {
        switch (cur_.kind) {
            case Tok::Tilde:
                advance();
                return make_not(parse_unary());
            case Tok::Modal: {
                char m = cur_.text[0];
                int line = cur_.line, col = cur_.col;
                advance();
                std::string agent = parse_bracketed_agent();
                FormulaPtr body = parse_unary();
                if (m == 'A' && contains_dynamic(body))
                    throw ParseError(line, col,
                                     "dynamic operator inside an A[..] operand", "");
                switch (m) {
                    case 'A': return make_aware(agent, body);
                    case 'I': return make_implicit(agent, body);
                    case 'E': return make_explicit(agent, body);
                    case 'S': return make_sim_box(agent, body);
                    default: return make_ek_box(agent, body);
                }
            }
            case Tok::Plus:
            case Tok::Minus: {
                bool add = cur_.kind == Tok::Plus;
                advance();
                std::string agent = parse_bracketed_agent();
                expect(Tok::LBrace, "'{'");
                std::vector<std::string> atoms;
                if (cur_.kind != Tok::Ident) fail("atom name");
                atoms.push_back(cur_.text);
                advance();
                while (cur_.kind == Tok::Comma) {
                    advance();
                    if (cur_.kind != Tok::Ident) fail("atom name");
                    atoms.push_back(cur_.text);
                    advance();
                }
                expect(Tok::RBrace, "'}'");
                FormulaPtr body = parse_unary();
                return add ? make_add_aware(agent, std::move(atoms), body)
                           : make_del_aware(agent, std::move(atoms), body);
            }
            default:
                return parse_primary();
        }
    }

    FormulaPtr parse_primary() {
        if (cur_.kind == Tok::Ident) {
            FormulaPtr f = make_atom(cur_.text);
            advance();
            return f;
        }
        if (cur_.kind == Tok::LParen) {
            advance();
            FormulaPtr f = parse_iff();
            expect(Tok::RParen, "')'");
            return f;
        }
        fail("atom, '~', modal operator or '('");
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 1, 1};
};

}  // namespace

FormulaPtr parse(const std::string& text) {
    return Parser(text).run();
}

}  // namespace ail
