#include "foliate/lex.hpp"

#include <cctype>
#include <sstream>

namespace foliate {

ParseError::ParseError(std::size_t line, std::size_t col, std::string found,
                       std::vector<std::string> expected)
    : std::runtime_error(compose(line, col, found, expected)),
      line_(line),
      col_(col),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

std::string ParseError::compose(std::size_t line, std::size_t col,
                                const std::string& found,
                                const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << "line " << line << ", col " << col << ": found " << found << ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) os << (i + 1 == expected.size() ? " or " : ", ");
        os << expected[i];
    }
    return os.str();
}

std::string Token::describe() const {
    switch (kind) {
        case Kind::Ident:
            return "identifier '" + text + "'";
        case Kind::Int:
            return "number '" + text + "'";
        case Kind::Punct:
            return "'" + text + "'";
        case Kind::End:
            return "end of line";
    }
    return "?";
}

Lexer::Lexer(std::string src, std::size_t start_line) {
    std::size_t line = start_line, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i < src.size() && src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {  // comment to end of line
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            if (j < src.size() && src[j] == '?') ++j;  // command words like invariant?
            t.kind = Token::Kind::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Kind::Int;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else {
            t.kind = Token::Kind::Punct;
            if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
                t.text = "->";
                advance(2);
            } else {
                t.text = std::string(1, c);
                advance(1);
            }
        }
        toks_.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.col = col;
    toks_.push_back(std::move(end));
}

Token Lexer::expect_punct(const char* s) {
    if (!peek().is_punct(s)) fail({std::string("'") + s + "'"});
    return next();
}

Token Lexer::expect_ident() {
    if (!peek().is(Token::Kind::Ident)) fail({"identifier"});
    return next();
}

Token Lexer::expect_int() {
    if (!peek().is(Token::Kind::Int)) fail({"number"});
    return next();
}

bool Lexer::accept_punct(const char* s) {
    if (peek().is_punct(s)) {
        next();
        return true;
    }
    return false;
}

bool Lexer::accept_ident(const char* s) {
    if (peek().is_ident(s)) {
        next();
        return true;
    }
    return false;
}

void Lexer::fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.col, t.describe(), std::move(expected));
}

}  // namespace foliate
