#include "foliate/format.hpp"

#include <sstream>

#include "foliate/order.hpp"

namespace foliate {

namespace {

Poly parse_expr(Lexer& lx, const RingPtr& ring);

Poly parse_base(Lexer& lx, const RingPtr& ring) {
    const Token& t = lx.peek();
    if (t.is(Token::Kind::Int)) {
        Token num = lx.next();
        mpq_class c(num.text);
        if (lx.peek().is_punct("/") && lx.peek2().is(Token::Kind::Int)) {
            lx.next();
            Token den = lx.next();
            if (mpq_class(den.text) == 0)
                throw ParseError(den.line, den.col, "'" + den.text + "'",
                                 {"nonzero denominator"});
            c /= mpq_class(den.text);
        }
        c.canonicalize();
        return Poly::constant(ring, c);
    }
    if (t.is(Token::Kind::Ident)) {
        Token v = lx.next();
        auto idx = ring->var_index(v.text);
        if (!idx)
            throw ParseError(v.line, v.col, v.describe(), {"a variable of the ring"});
        return Poly::variable(ring, *idx);
    }
    if (t.is_punct("(")) {
        lx.next();
        Poly p = parse_expr(lx, ring);
        lx.expect_punct(")");
        return p;
    }
    lx.fail({"number", "variable", "'('"});
}

Poly parse_factor(Lexer& lx, const RingPtr& ring) {
    Poly base = parse_base(lx, ring);
    if (lx.accept_punct("^")) {
        Token e = lx.expect_int();
        unsigned long n = std::stoul(e.text);
        if (n > 256)
            throw ParseError(e.line, e.col, "'" + e.text + "'", {"exponent <= 256"});
        return base.pow(unsigned(n));
    }
    return base;
}

Poly parse_term(Lexer& lx, const RingPtr& ring) {
    Poly p = parse_factor(lx, ring);
    while (lx.accept_punct("*")) p = p * parse_factor(lx, ring);
    return p;
}

Poly parse_expr(Lexer& lx, const RingPtr& ring) {
    bool neg = false;
    if (lx.accept_punct("-"))
        neg = true;
    else
        lx.accept_punct("+");
    Poly p = parse_term(lx, ring);
    if (neg) p = -p;
    for (;;) {
        if (lx.accept_punct("+"))
            p += parse_term(lx, ring);
        else if (lx.accept_punct("-"))
            p -= parse_term(lx, ring);
        else
            return p;
    }
}

}  // namespace

Poly parse_poly_expr(Lexer& lx, const RingPtr& ring) { return parse_expr(lx, ring); }

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    Lexer lx(text);
    Poly p = parse_expr(lx, ring);
    if (!lx.at_end()) lx.fail({"end of input"});
    return p;
}

std::string print_coeff(const mpq_class& c) { return c.get_str(); }

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const Ring& ring = *p.ring();
    auto terms = ordered_terms(p, MonomialOrder::degrevlex());
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        // over a prime field every coefficient is a canonical nonnegative rep
        bool negative = ring.char_p == 0 && c < 0;
        mpq_class mag = negative ? mpq_class(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.vars[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << mono;
        } else {
            os << mag.get_str() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace foliate
