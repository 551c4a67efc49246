#pragma once
/* Line/column-tracking tokenizer shared by the polynomial parser and the
 * command-script parser.
 *
 * Tokens: identifiers ([A-Za-z_][A-Za-z0-9_]*, optionally suffixed '?'),
 * nonnegative integer literals, and punctuation.  "->" is one token.
 * '#' starts a comment running to end of line.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "foliate/error.hpp"

namespace foliate {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1, col = 1;

    bool is(Kind k) const { return kind == k; }
    bool is_punct(const char* s) const { return kind == Kind::Punct && text == s; }
    bool is_ident(const char* s) const { return kind == Kind::Ident && text == s; }
    std::string describe() const;
};

class Lexer {
public:
    explicit Lexer(std::string src, std::size_t start_line = 1);

    const Token& peek() const { return toks_[pos_]; }
    const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_end() const { return toks_[pos_].kind == Token::Kind::End; }

    /* Consume a specific token or raise a positioned ParseError. */
    Token expect_punct(const char* s);
    Token expect_ident();
    Token expect_int();

    bool accept_punct(const char* s);
    bool accept_ident(const char* s);

    [[noreturn]] void fail(std::vector<std::string> expected) const;

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace foliate
