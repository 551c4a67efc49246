#include "foliate/session.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "foliate/derivation.hpp"
#include "foliate/diffideal.hpp"
#include "foliate/error.hpp"
#include "foliate/format.hpp"
#include "foliate/groebner.hpp"
#include "foliate/identities.hpp"
#include "foliate/lex.hpp"
#include "foliate/poly.hpp"
#include "foliate/projective.hpp"
#include "foliate/ring.hpp"
#include "foliate/scheme.hpp"
#include "foliate/sections.hpp"

namespace foliate {

namespace {

/* ---- bound items: declarations keep their parsed payload, commands keep
   resolved names plus any parsed polynomials.  All name resolution happens
   at load time; object construction happens at run time so that module
   errors carry the command index. ---- */

struct RingDecl {
    std::string name;
    RingPtr ring;
};
struct DerDecl {
    std::string name, ring_name;
    RingPtr ring;
    std::vector<Poly> images;  // one per ring variable
};
struct HsDecl {
    std::string name, ring_name, from;
    RingPtr ring;
    unsigned order = 1;
};
struct IdealDecl {
    std::string name, ring_name;
    RingPtr ring;
    std::vector<Poly> gens;
};
struct SchemeDecl {
    std::string name, ring_name, der_name;
    RingPtr ring;
    bool inline_rel = false;
    std::string rel_name;        // when !inline_rel
    std::vector<Poly> rel_gens;  // resolved either way
};
struct OpenDecl {
    std::string name, scheme_name;
    bool basic = false;
    Poly basic_f;  // D(f) form
    bool inline_comp = false;
    std::string comp_name;        // complement by ideal name
    std::vector<Poly> comp_gens;  // resolved either way
};
struct ProjDecl {
    std::string name;
    unsigned char_p = 0, dim = 0;
    std::vector<std::vector<mpq_class>> mat;
};

struct CmdIsDifferential {
    std::string ideal, der;
    bool higher = false;  // der names an hs family
};
struct CmdClosure {
    std::string ideal, der;
};
struct CmdTrajectory {
    std::string ideal, der;
    bool higher = false;
    std::optional<unsigned> deg, rounds;
};
struct CmdIsLeaf {
    std::string scheme, ideal;
};
struct CmdUDelta {
    std::string scheme, open;
};
struct CmdInvariant {
    std::string scheme, open;
};
struct CmdCfLaws {
    std::string scheme;
    std::vector<std::string> opens;
};
struct CmdProjLeaves {
    std::string proj;
};
struct CmdConstant {
    std::string scheme;
    Poly num, den;
};
struct CmdExtend {
    std::string scheme;
    Poly num, den;
    std::optional<unsigned> order;
};
struct CmdCompare {
    std::string scheme;
    Poly domain;
    std::vector<std::pair<Poly, Poly>> fractions;
    std::optional<unsigned> order;
};
struct CmdVerifyPair {
    std::optional<unsigned> order;
};
struct CmdVerifyCross {
    unsigned level = 3;
    std::optional<unsigned> order;
};
struct CmdVerifyPowers {
    unsigned max_n = 1;
};
struct CmdVerifyHs {
    std::string hs;
};

using Item = std::variant<RingDecl, DerDecl, HsDecl, IdealDecl, SchemeDecl, OpenDecl, ProjDecl,
                          CmdIsDifferential, CmdClosure, CmdTrajectory, CmdIsLeaf, CmdUDelta,
                          CmdInvariant, CmdCfLaws, CmdProjLeaves, CmdConstant, CmdExtend,
                          CmdCompare, CmdVerifyPair, CmdVerifyCross, CmdVerifyPowers, CmdVerifyHs>;

struct SessionState {
    std::vector<Item> items;
    std::vector<std::string> echo;  // canonical text, aligned with items

    /* load-time registries */
    std::map<std::string, RingDecl> rings;
    std::map<std::string, DerDecl> ders;
    std::map<std::string, HsDecl> hss;
    std::map<std::string, IdealDecl> ideals;
    std::map<std::string, SchemeDecl> schemes;
    std::map<std::string, OpenDecl> opens;
    std::map<std::string, ProjDecl> projs;
};

}  // namespace

struct Session::Data : SessionState {};

namespace {

[[noreturn]] void fail_at(const Token& t, std::vector<std::string> expected) {
    throw ParseError(t.line, t.col, t.describe(), std::move(expected));
}

unsigned small_uint(const Token& t) {
    try {
        unsigned long v = std::stoul(t.text);
        if (v > 1000000) fail_at(t, {"a value at most 1000000"});
        return static_cast<unsigned>(v);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail_at(t, {"a value at most 1000000"});
    }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string fmt_gens(const std::vector<Poly>& gens) {
    if (gens.empty()) return "<0>";
    std::vector<std::string> parts;
    for (const auto& g : gens) parts.push_back(print_poly(g));
    return "<" + join(parts, ", ") + ">";
}

std::string fmt_basis(const Ideal& I) {
    const auto& gb = I.groebner_basis();
    if (gb.empty()) return "<0>";
    std::vector<std::string> parts;
    for (const auto& g : gb) parts.push_back(print_poly(g));
    return "<" + join(parts, ", ") + ">";
}

std::string fmt_matrix(const std::vector<std::vector<mpq_class>>& mat) {
    std::vector<std::string> rows;
    for (const auto& row : mat) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(print_coeff(c));
        rows.push_back("[" + join(cells, ", ") + "]");
    }
    return "[" + join(rows, ", ") + "]";
}

std::string fmt_fraction(const Poly& num, const Poly& den) {
    return print_poly(num) + " / " + print_poly(den);
}

/* ---- parser: one line per item ---- */

struct Parser {
    SessionState& d;

    template <class M>
    const typename M::mapped_type& need(const M& m, const Token& t, const char* what) const {
        auto it = m.find(t.text);
        if (it == m.end()) fail_at(t, {std::string("the name of a declared ") + what});
        return it->second;
    }

    template <class M>
    void check_fresh(const M& m, const Token& t, const char* kind) const {
        if (m.count(t.text))
            fail_at(t, {std::string("a name not already used for a ") + kind});
    }

    std::vector<Poly> gen_list(Lexer& lx, const RingPtr& ring) const {
        lx.expect_punct("<");
        std::vector<Poly> gens;
        gens.push_back(parse_poly_expr(lx, ring));
        while (lx.accept_punct(",")) gens.push_back(parse_poly_expr(lx, ring));
        lx.expect_punct(">");
        return gens;
    }

    /* `a / b`; a bare `a` means denominator 1.  A leading integer literal
       eats `p/q` itself, so `2/3` is the constant fraction (2/3)/1. */
    std::pair<Poly, Poly> fraction(Lexer& lx, const RingPtr& ring) const {
        Poly num = parse_poly_expr(lx, ring);
        Poly den = Poly::constant(ring, 1);
        if (lx.accept_punct("/")) den = parse_poly_expr(lx, ring);
        return {num, den};
    }

    RingPtr ring_literal(Lexer& lx, unsigned& char_p) const {
        Token head = lx.expect_ident();
        char_p = 0;
        if (head.text == "GF") {
            lx.expect_punct("(");
            Token p = lx.expect_int();
            char_p = small_uint(p);
            lx.expect_punct(")");
            if (char_p < 2) fail_at(p, {"a prime"});
        } else if (head.text != "QQ") {
            fail_at(head, {"'QQ'", "'GF'"});
        }
        lx.expect_punct("[");
        std::vector<std::string> vars;
        vars.push_back(lx.expect_ident().text);
        while (lx.accept_punct(",")) vars.push_back(lx.expect_ident().text);
        lx.expect_punct("]");
        try {
            return make_ring(char_p, vars);
        } catch (const Error& e) {
            fail_at(head, {std::string("a valid ring literal (") + e.what() + ")"});
        }
    }

    std::string ring_literal_echo(const RingPtr& r) const {
        std::string s = r->char_p ? "GF(" + std::to_string(r->char_p) + ")" : std::string("QQ");
        std::vector<std::string> vs(r->vars.begin(), r->vars.end());
        return s + "[" + join(vs, ", ") + "]";
    }

    mpq_class rational_entry(Lexer& lx) const {
        bool neg = lx.accept_punct("-");
        Token num = lx.expect_int();
        mpq_class v(num.text);
        if (lx.accept_punct("/")) {
            Token den = lx.expect_int();
            if (mpq_class(den.text) == 0) fail_at(den, {"a nonzero denominator"});
            v /= mpq_class(den.text);
        }
        v.canonicalize();
        return neg ? mpq_class(-v) : v;
    }

    /* Scheme for an open set without an `on` clause: unambiguous only when
       a single scheme is in scope. */
    const SchemeDecl& sole_scheme(const Token& at) const {
        if (d.schemes.empty())
            fail_at(at, {"'on <scheme>' (no scheme is declared yet)"});
        if (d.schemes.size() > 1)
            fail_at(at, {"'on <scheme>' (several schemes are declared)"});
        return d.schemes.begin()->second;
    }

    void parse_line(Lexer& lx) {
        Token head = lx.expect_ident();
        const std::string& k = head.text;
        if (k == "ring")
            decl_ring(lx);
        else if (k == "der")
            decl_der(lx);
        else if (k == "hs")
            decl_hs(lx);
        else if (k == "ideal")
            decl_ideal(lx);
        else if (k == "scheme")
            decl_scheme(lx);
        else if (k == "open")
            decl_open(lx);
        else if (k == "proj")
            decl_proj(lx);
        else if (k == "is_differential")
            cmd_is_differential(lx);
        else if (k == "closure")
            cmd_closure(lx);
        else if (k == "trajectory")
            cmd_trajectory(lx);
        else if (k == "is_leaf")
            cmd_is_leaf(lx);
        else if (k == "udelta")
            cmd_udelta(lx);
        else if (k == "invariant?")
            cmd_invariant(lx);
        else if (k == "cf_laws")
            cmd_cf_laws(lx);
        else if (k == "proj_leaves")
            cmd_proj_leaves(lx);
        else if (k == "constant?")
            cmd_constant(lx);
        else if (k == "extend")
            cmd_extend(lx);
        else if (k == "compare_constants")
            cmd_compare(lx);
        else if (k == "verify")
            cmd_verify(lx);
        else
            fail_at(head, {"'ring'", "'der'", "'hs'", "'ideal'", "'scheme'", "'open'", "'proj'",
                           "'is_differential'", "'closure'", "'trajectory'", "'is_leaf'",
                           "'udelta'", "'invariant?'", "'cf_laws'", "'proj_leaves'", "'constant?'",
                           "'extend'", "'compare_constants'", "'verify'"});
        if (!lx.at_end()) lx.fail({"end of line"});
    }

    void push(Item item, std::string echo) {
        d.items.push_back(std::move(item));
        d.echo.push_back(std::move(echo));
    }

    /* ring R = QQ[x, y] */
    void decl_ring(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.rings, name, "ring");
        lx.expect_punct("=");
        unsigned p = 0;
        RingPtr r = ring_literal(lx, p);
        RingDecl decl{name.text, r};
        d.rings[name.text] = decl;
        push(decl, "ring " + name.text + " = " + ring_literal_echo(r));
    }

    /* der d on R : x -> -2*y, y -> 3*x^2 */
    void decl_der(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.ders, name, "derivation");
        lx.expect_ident();  // on
        Token rn = lx.expect_ident();
        const RingDecl& rd = need(d.rings, rn, "ring");
        lx.expect_punct(":");
        std::vector<Poly> images(rd.ring->nvars(), Poly::zero(rd.ring));
        std::vector<bool> seen(rd.ring->nvars(), false);
        for (;;) {
            Token v = lx.expect_ident();
            auto idx = rd.ring->var_index(v.text);
            if (!idx) fail_at(v, {"a variable of ring " + rn.text});
            if (seen[*idx]) fail_at(v, {"a variable without an earlier image"});
            lx.expect_punct("->");
            images[*idx] = parse_poly_expr(lx, rd.ring);
            seen[*idx] = true;
            if (!lx.accept_punct(",")) break;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) lx.fail({"an image for variable '" + rd.ring->vars[i] + "'"});
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < images.size(); ++i)
            parts.push_back(rd.ring->vars[i] + " -> " + print_poly(images[i]));
        DerDecl decl{name.text, rn.text, rd.ring, images};
        d.ders[name.text] = decl;
        push(decl, "der " + name.text + " on " + rn.text + " : " + join(parts, ", "));
    }

    /* hs h on R order 8 from d */
    void decl_hs(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.hss, name, "higher derivation");
        lx.expect_ident();  // on
        Token rn = lx.expect_ident();
        const RingDecl& rd = need(d.rings, rn, "ring");
        Token kw = lx.expect_ident();
        if (kw.text != "order") fail_at(kw, {"'order'"});
        Token ot = lx.expect_int();
        unsigned order = small_uint(ot);
        if (order < 1) fail_at(ot, {"an order of at least 1"});
        Token kw2 = lx.expect_ident();
        if (kw2.text != "from") fail_at(kw2, {"'from'"});
        Token dn = lx.expect_ident();
        const DerDecl& dd = need(d.ders, dn, "derivation");
        if (dd.ring_name != rn.text) fail_at(dn, {"a derivation on ring " + rn.text});
        HsDecl decl{name.text, rn.text, dn.text, rd.ring, order};
        d.hss[name.text] = decl;
        push(decl, "hs " + name.text + " on " + rn.text + " order " + std::to_string(order) +
                       " from " + dn.text);
    }

    /* ideal P on R = <x - 1, y>; the `on R` clause may be omitted when a
       single ring is in scope. */
    void decl_ideal(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.ideals, name, "ideal");
        std::string ring_name;
        RingPtr ring;
        if (lx.peek().is_ident("on")) {
            lx.next();
            Token rn = lx.expect_ident();
            const RingDecl& rd = need(d.rings, rn, "ring");
            ring_name = rn.text;
            ring = rd.ring;
        } else {
            if (d.rings.empty()) fail_at(name, {"'on <ring>' (no ring is declared yet)"});
            if (d.rings.size() > 1) fail_at(name, {"'on <ring>' (several rings are declared)"});
            ring_name = d.rings.begin()->first;
            ring = d.rings.begin()->second.ring;
        }
        lx.expect_punct("=");
        std::vector<Poly> gens = gen_list(lx, ring);
        IdealDecl decl{name.text, ring_name, ring, gens};
        d.ideals[name.text] = decl;
        push(decl, "ideal " + name.text + " on " + ring_name + " = " + fmt_gens(gens));
    }

    /* scheme X = (R, I, d); I is an ideal name or an inline <...> list */
    void decl_scheme(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.schemes, name, "scheme");
        lx.expect_punct("=");
        lx.expect_punct("(");
        Token rn = lx.expect_ident();
        const RingDecl& rd = need(d.rings, rn, "ring");
        lx.expect_punct(",");
        SchemeDecl decl;
        decl.name = name.text;
        decl.ring_name = rn.text;
        decl.ring = rd.ring;
        std::string rel_text;
        if (lx.peek().is_punct("<")) {
            decl.inline_rel = true;
            decl.rel_gens = gen_list(lx, rd.ring);
            rel_text = fmt_gens(decl.rel_gens);
        } else {
            Token in = lx.expect_ident();
            const IdealDecl& id = need(d.ideals, in, "ideal");
            if (id.ring_name != rn.text) fail_at(in, {"an ideal on ring " + rn.text});
            decl.rel_name = in.text;
            decl.rel_gens = id.gens;
            rel_text = in.text;
        }
        lx.expect_punct(",");
        Token dn = lx.expect_ident();
        const DerDecl& dd = need(d.ders, dn, "derivation");
        if (dd.ring_name != rn.text) fail_at(dn, {"a derivation on ring " + rn.text});
        decl.der_name = dn.text;
        lx.expect_punct(")");
        d.schemes[name.text] = decl;
        push(decl,
             "scheme " + name.text + " = (" + rn.text + ", " + rel_text + ", " + dn.text + ")");
    }

    /* open U on X = complement <x> | open U = D(x) */
    void decl_open(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.opens, name, "open set");
        OpenDecl decl;
        decl.name = name.text;
        const SchemeDecl* sd = nullptr;
        if (lx.peek().is_ident("on")) {
            lx.next();
            Token sn = lx.expect_ident();
            sd = &need(d.schemes, sn, "scheme");
        } else {
            sd = &sole_scheme(name);
        }
        decl.scheme_name = sd->name;
        lx.expect_punct("=");
        Token form = lx.expect_ident();
        std::string body;
        if (form.text == "complement") {
            if (lx.peek().is_punct("<")) {
                decl.inline_comp = true;
                decl.comp_gens = gen_list(lx, sd->ring);
                body = "complement " + fmt_gens(decl.comp_gens);
            } else {
                Token in = lx.expect_ident();
                const IdealDecl& id = need(d.ideals, in, "ideal");
                if (id.ring_name != sd->ring_name)
                    fail_at(in, {"an ideal on ring " + sd->ring_name});
                decl.comp_name = in.text;
                decl.comp_gens = id.gens;
                body = "complement " + in.text;
            }
        } else if (form.text == "D") {
            decl.basic = true;
            lx.expect_punct("(");
            decl.basic_f = parse_poly_expr(lx, sd->ring);
            lx.expect_punct(")");
            decl.comp_gens = {decl.basic_f};
            body = "D(" + print_poly(decl.basic_f) + ")";
        } else {
            fail_at(form, {"'complement'", "'D'"});
        }
        d.opens[name.text] = decl;
        push(decl, "open " + name.text + " on " + decl.scheme_name + " = " + body);
    }

    /* proj V = P(n, QQ, [[...], ...]) */
    void decl_proj(Lexer& lx) {
        Token name = lx.expect_ident();
        check_fresh(d.projs, name, "projective field");
        lx.expect_punct("=");
        Token pw = lx.expect_ident();
        if (pw.text != "P") fail_at(pw, {"'P'"});
        lx.expect_punct("(");
        Token nt = lx.expect_int();
        unsigned dim = small_uint(nt);
        lx.expect_punct(",");
        Token field = lx.expect_ident();
        unsigned char_p = 0;
        std::string field_text = "QQ";
        if (field.text == "GF") {
            lx.expect_punct("(");
            Token p = lx.expect_int();
            char_p = small_uint(p);
            if (char_p < 2) fail_at(p, {"a prime"});
            lx.expect_punct(")");
            field_text = "GF(" + std::to_string(char_p) + ")";
        } else if (field.text != "QQ") {
            fail_at(field, {"'QQ'", "'GF'"});
        }
        lx.expect_punct(",");
        lx.expect_punct("[");
        std::vector<std::vector<mpq_class>> mat;
        do {
            lx.expect_punct("[");
            std::vector<mpq_class> row;
            row.push_back(rational_entry(lx));
            while (lx.accept_punct(",")) row.push_back(rational_entry(lx));
            lx.expect_punct("]");
            mat.push_back(std::move(row));
        } while (lx.accept_punct(","));
        lx.expect_punct("]");
        lx.expect_punct(")");
        ProjDecl decl{name.text, char_p, dim, mat};
        d.projs[name.text] = decl;
        push(decl, "proj " + name.text + " = P(" + std::to_string(dim) + ", " + field_text + ", " +
                       fmt_matrix(mat) + ")");
    }

    /* Second name of is_differential / trajectory: a derivation, or a
       higher derivation (the derivation wins when both kinds share the
       name). */
    bool der_or_hs(const Token& t, const IdealDecl& id) const {
        if (d.ders.count(t.text)) {
            if (d.ders.at(t.text).ring_name != id.ring_name)
                fail_at(t, {"a derivation on ring " + id.ring_name});
            return false;
        }
        if (d.hss.count(t.text)) {
            if (d.hss.at(t.text).ring_name != id.ring_name)
                fail_at(t, {"a higher derivation on ring " + id.ring_name});
            return true;
        }
        fail_at(t, {"the name of a declared derivation or higher derivation"});
    }

    void cmd_is_differential(Lexer& lx) {
        Token in = lx.expect_ident();
        const IdealDecl& id = need(d.ideals, in, "ideal");
        Token dn = lx.expect_ident();
        bool higher = der_or_hs(dn, id);
        push(CmdIsDifferential{in.text, dn.text, higher},
             "is_differential " + in.text + " " + dn.text);
    }

    void cmd_closure(Lexer& lx) {
        Token in = lx.expect_ident();
        const IdealDecl& id = need(d.ideals, in, "ideal");
        Token dn = lx.expect_ident();
        const DerDecl& dd = need(d.ders, dn, "derivation");
        if (dd.ring_name != id.ring_name) fail_at(dn, {"a derivation on ring " + id.ring_name});
        push(CmdClosure{in.text, dn.text}, "closure " + in.text + " " + dn.text);
    }

    void cmd_trajectory(Lexer& lx) {
        Token in = lx.expect_ident();
        const IdealDecl& id = need(d.ideals, in, "ideal");
        Token dn = lx.expect_ident();
        CmdTrajectory cmd;
        cmd.ideal = in.text;
        cmd.der = dn.text;
        cmd.higher = der_or_hs(dn, id);
        std::string echo = "trajectory " + in.text + " " + dn.text;
        while (lx.peek().is_ident("deg") || lx.peek().is_ident("rounds")) {
            Token kw = lx.next();
            Token vt = lx.expect_int();
            unsigned v = small_uint(vt);
            if (kw.text == "deg") {
                if (cmd.deg) fail_at(kw, {"a single 'deg' option"});
                cmd.deg = v;
                echo += " deg " + std::to_string(v);
            } else {
                if (cmd.rounds) fail_at(kw, {"a single 'rounds' option"});
                cmd.rounds = v;
                echo += " rounds " + std::to_string(v);
            }
        }
        push(cmd, echo);
    }

    void cmd_is_leaf(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        Token in = lx.expect_ident();
        const IdealDecl& id = need(d.ideals, in, "ideal");
        if (id.ring_name != sd.ring_name) fail_at(in, {"an ideal on ring " + sd.ring_name});
        push(CmdIsLeaf{sn.text, in.text}, "is_leaf " + sn.text + " " + in.text);
    }

    const OpenDecl& open_on(const Token& t, const SchemeDecl& sd) const {
        const OpenDecl& od = need(d.opens, t, "open set");
        if (od.scheme_name != sd.name) fail_at(t, {"an open set on scheme " + sd.name});
        return od;
    }

    void cmd_udelta(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        Token un = lx.expect_ident();
        open_on(un, sd);
        push(CmdUDelta{sn.text, un.text}, "udelta " + sn.text + " " + un.text);
    }

    void cmd_invariant(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        Token un = lx.expect_ident();
        open_on(un, sd);
        push(CmdInvariant{sn.text, un.text}, "invariant? " + sn.text + " " + un.text);
    }

    void cmd_cf_laws(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        CmdCfLaws cmd;
        cmd.scheme = sn.text;
        std::string echo = "cf_laws " + sn.text;
        while (!lx.at_end()) {
            Token un = lx.expect_ident();
            open_on(un, sd);
            cmd.opens.push_back(un.text);
            echo += " " + un.text;
        }
        push(cmd, echo);
    }

    void cmd_proj_leaves(Lexer& lx) {
        Token vn = lx.expect_ident();
        need(d.projs, vn, "projective field");
        push(CmdProjLeaves{vn.text}, "proj_leaves " + vn.text);
    }

    void cmd_constant(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        auto [num, den] = fraction(lx, sd.ring);
        push(CmdConstant{sn.text, num, den},
             "constant? " + sn.text + " " + fmt_fraction(num, den));
    }

    void cmd_extend(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        auto [num, den] = fraction(lx, sd.ring);
        CmdExtend cmd;
        cmd.scheme = sn.text;
        cmd.num = num;
        cmd.den = den;
        std::string echo = "extend " + sn.text + " " + fmt_fraction(num, den);
        if (lx.peek().is_ident("order")) {
            lx.next();
            cmd.order = small_uint(lx.expect_int());
            echo += " order " + std::to_string(*cmd.order);
        }
        push(cmd, echo);
    }

    void cmd_compare(Lexer& lx) {
        Token sn = lx.expect_ident();
        const SchemeDecl& sd = need(d.schemes, sn, "scheme");
        Token dw = lx.expect_ident();
        if (dw.text != "D") fail_at(dw, {"'D'"});
        lx.expect_punct("(");
        Poly b = parse_poly_expr(lx, sd.ring);
        lx.expect_punct(")");
        lx.expect_punct("{");
        CmdCompare cmd;
        cmd.scheme = sn.text;
        cmd.domain = b;
        std::vector<std::string> parts;
        do {
            auto [num, den] = fraction(lx, sd.ring);
            cmd.fractions.emplace_back(num, den);
            parts.push_back(fmt_fraction(num, den));
        } while (lx.accept_punct(","));
        lx.expect_punct("}");
        std::string echo = "compare_constants " + sn.text + " D(" + print_poly(b) + ") {" +
                           join(parts, ", ") + "}";
        if (lx.peek().is_ident("order")) {
            lx.next();
            cmd.order = small_uint(lx.expect_int());
            echo += " order " + std::to_string(*cmd.order);
        }
        push(cmd, echo);
    }

    void cmd_verify(Lexer& lx) {
        Token which = lx.expect_ident();
        if (which.text == "lemma43") {
            CmdVerifyPair cmd;
            std::string echo = "verify lemma43";
            if (lx.peek().is_ident("order")) {
                lx.next();
                cmd.order = small_uint(lx.expect_int());
                echo += " order " + std::to_string(*cmd.order);
            }
            push(cmd, echo);
        } else if (which.text == "prop42") {
            CmdVerifyCross cmd;
            cmd.level = small_uint(lx.expect_int());
            std::string echo = "verify prop42 " + std::to_string(cmd.level);
            if (lx.peek().is_ident("order")) {
                lx.next();
                cmd.order = small_uint(lx.expect_int());
                echo += " order " + std::to_string(*cmd.order);
            }
            push(cmd, echo);
        } else if (which.text == "thetalemma") {
            CmdVerifyPowers cmd;
            cmd.max_n = small_uint(lx.expect_int());
            push(cmd, "verify thetalemma " + std::to_string(cmd.max_n));
        } else if (which.text == "hs") {
            Token hn = lx.expect_ident();
            need(d.hss, hn, "higher derivation");
            push(CmdVerifyHs{hn.text}, "verify hs " + hn.text);
        } else {
            fail_at(which, {"'lemma43'", "'prop42'", "'thetalemma'", "'hs'"});
        }
    }
};

/* ---- execution ---- */

struct ResLine {
    std::string name, value, status;
    bool failed = false;
};

struct Exec {
    const SessionState& d;
    const RunOptions& opt;

    Exec(const SessionState& state, const RunOptions& options) : d(state), opt(options) {}

    std::map<std::string, Derivation> ders;
    std::map<std::string, HigherDerivation> hss;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, AffineDiffScheme> schemes;
    std::map<std::string, OpenSet> opens;
    std::map<std::string, ProjectiveVectorField> projs;

    std::vector<ResLine> lines;

    void emit(const std::string& name, std::string value, std::string status = "",
              bool failed = false) {
        lines.push_back({name, std::move(value), std::move(status), failed});
    }

    static const char* bool_text(bool b) { return b ? "true" : "false"; }

    void operator()(const RingDecl&, const std::string&) {}

    void operator()(const DerDecl& x, const std::string&) {
        ders.emplace(x.name, make_derivation(x.ring, x.images));
    }

    void operator()(const HsDecl& x, const std::string&) {
        hss.emplace(x.name, hs_from_derivation(ders.at(x.from), x.order));
    }

    void operator()(const IdealDecl& x, const std::string&) {
        ideals.emplace(x.name, Ideal(x.ring, x.gens));
    }

    void operator()(const SchemeDecl& x, const std::string&) {
        schemes.emplace(x.name, make_affine(x.ring, x.rel_gens, ders.at(x.der_name)));
    }

    void operator()(const OpenDecl& x, const std::string&) {
        const AffineDiffScheme& X = schemes.at(x.scheme_name);
        if (x.basic)
            opens.emplace(x.name, basic_open(X, x.basic_f));
        else
            opens.emplace(x.name, make_open(X, Ideal(X.ring, x.comp_gens)));
    }

    void operator()(const ProjDecl& x, const std::string&) {
        projs.emplace(x.name, projective_field_from_matrix(x.char_p, x.dim, x.mat));
    }

    void operator()(const CmdIsDifferential& c, const std::string& name) {
        bool ok = c.higher ? is_differential_ideal_hs(ideals.at(c.ideal), hss.at(c.der))
                           : is_differential_ideal(ideals.at(c.ideal), ders.at(c.der));
        emit(name, bool_text(ok), "", !ok);
    }

    void operator()(const CmdClosure& c, const std::string& name) {
        ClosureResult r = diff_closure(ideals.at(c.ideal), ders.at(c.der));
        std::string status = "rounds=" + std::to_string(r.rounds) +
                             (r.stabilized ? ", stable" : ", UNSTABLE");
        emit(name, fmt_basis(r.closure), status, !r.stabilized);
    }

    void operator()(const CmdTrajectory& c, const std::string& name) {
        std::optional<unsigned> deg = c.deg ? c.deg : opt.deg;
        unsigned rounds = c.rounds ? *c.rounds : opt.rounds.value_or(32);
        TrajectoryResult r = c.higher
                                 ? hs_trajectory(ideals.at(c.ideal), hss.at(c.der), deg, rounds)
                                 : trajectory(ideals.at(c.ideal), ders.at(c.der), deg, rounds);
        std::string status = (r.status == TrajStatus::Exact ? "Exact" : "BoundedApprox");
        status += ", deg<=" + std::to_string(r.deg_bound);
        status += ", rounds=" + std::to_string(r.rounds_used);
        emit(name, fmt_basis(r.ideal), status);
    }

    void operator()(const CmdIsLeaf& c, const std::string& name) {
        bool ok = is_leaf(schemes.at(c.scheme), ideals.at(c.ideal));
        emit(name, bool_text(ok), "", !ok);
    }

    void operator()(const CmdUDelta& c, const std::string& name) {
        UDeltaResult r = u_delta(schemes.at(c.scheme), opens.at(c.open));
        std::string status = "rounds=" + std::to_string(r.closure.rounds) +
                             (r.closure.stabilized ? ", stable" : ", UNSTABLE");
        emit(name, "complement " + fmt_basis(r.u_delta.complement), status,
             !r.closure.stabilized);
    }

    void operator()(const CmdInvariant& c, const std::string& name) {
        bool ok = is_invariant_open(schemes.at(c.scheme), opens.at(c.open));
        emit(name, bool_text(ok));
    }

    void operator()(const CmdCfLaws& c, const std::string& name) {
        std::vector<OpenSet> family;
        for (const auto& n : c.opens) family.push_back(opens.at(n));
        TopologyLawsReport r = cf_topology_laws(schemes.at(c.scheme), family);
        bool ok = r.union_law && r.intersection_law;
        emit(name,
             std::string("union ") + bool_text(r.union_law) + ", intersection " +
                 bool_text(r.intersection_law),
             "", !ok);
    }

    void operator()(const CmdProjLeaves& c, const std::string& name) {
        LeafSearchReport r = projective_rational_leaves(projs.at(c.proj));
        std::vector<std::string> parts;
        bool all_verified = true;
        for (const auto& leaf : r.leaves) {
            std::vector<std::string> coords;
            for (const auto& x : leaf.point) coords.push_back(print_coeff(x));
            parts.push_back("[" + join(coords, " : ") + "] eig " + print_coeff(leaf.eigenvalue) +
                            (leaf.verified ? " verified" : " UNVERIFIED"));
            all_verified = all_verified && leaf.verified;
        }
        std::string value = parts.empty() ? "none" : join(parts, "; ");
        if (r.extension)
            value += "; extension degree " + std::to_string(r.extension->degree) + " (" +
                     print_poly(r.extension->rootless) + ")";
        emit(name, value, "", !all_verified);
    }

    void operator()(const CmdConstant& c, const std::string& name) {
        bool ok = is_constant_fraction(schemes.at(c.scheme), c.num, c.den);
        emit(name, bool_text(ok));
    }

    void operator()(const CmdExtend& c, const std::string& name) {
        unsigned order = c.order.value_or(3);
        ExtensionResult r = extend_constant(schemes.at(c.scheme), c.num, c.den, order);
        std::vector<std::string> patches, orders;
        for (const auto& p : r.section.patches)
            patches.push_back("(" + print_poly(p.num) + ", " + print_poly(p.den) + ")");
        for (unsigned n : r.orders) orders.push_back(std::to_string(n));
        std::string value =
            "{" + join(patches, ", ") + "} orders {" + join(orders, ", ") + "}";
        std::string status = (r.covers_u_delta ? "covers-udelta" : "partial-cover");
        status += ", rounds=" + std::to_string(r.closure.rounds);
        emit(name, value, status);
    }

    void operator()(const CmdCompare& c, const std::string& name) {
        std::vector<FractionPatch> fracs;
        for (const auto& [num, den] : c.fractions) fracs.push_back({num, den});
        unsigned order = c.order.value_or(3);
        ConstantsComparisonReport r =
            constants_comparison_report(schemes.at(c.scheme), c.domain, fracs, order);
        std::size_t ok = 0;
        std::vector<std::string> failing;
        for (const auto& e : r.entries) {
            if (e.ok())
                ++ok;
            else
                failing.push_back(std::to_string(e.entry + 1));
        }
        std::string value =
            std::to_string(ok) + "/" + std::to_string(r.entries.size()) + " round-trip ok";
        if (!failing.empty()) value += " (failing: " + join(failing, ", ") + ")";
        emit(name, value, "", !r.all_ok);
    }

    void operator()(const CmdVerifyPair& c, const std::string& name) {
        unsigned order = c.order ? *c.order : opt.jet_order.value_or(2);
        ExpandedIdentity r = verify_fraction_pair_identity(order);
        emit(name, r.holds ? "verified" : "NOT VERIFIED",
             "expanded, jet-order=" + std::to_string(order), !r.holds);
    }

    void operator()(const CmdVerifyCross& c, const std::string& name) {
        std::optional<unsigned> order = c.order ? c.order : opt.jet_order;
        CrossNumeratorReport r = verify_patch_cross_numerators(c.level, order);
        bool ok = r.all_verified && r.recurrence_ok;
        std::string status = "certificates=" + std::to_string(r.certificates.size()) +
                             ", recurrence=" + (r.recurrence_ok ? "exact" : "FAILS") +
                             ", jet-order=" + std::to_string(r.jet_order);
        emit(name, ok ? "verified" : "NOT VERIFIED", status, !ok);
    }

    void operator()(const CmdVerifyPowers& c, const std::string& name) {
        AnnihilatorPowersReport r = verify_annihilator_powers(c.max_n, opt.jet_order);
        emit(name, r.all_verified ? "verified" : "NOT VERIFIED",
             "certificates=" + std::to_string(r.certificates.size()), !r.all_verified);
    }

    void operator()(const CmdVerifyHs& c, const std::string& name) {
        const HigherDerivation& hs = hss.at(c.hs);
        const RingPtr& ring = hs.ring;
        bool leibniz = true;
        for (std::size_t i = 0; i < ring->nvars() && leibniz; ++i)
            for (std::size_t j = i; j < ring->nvars() && leibniz; ++j)
                leibniz = hs_check_leibniz(hs, Poly::variable(ring, i),
                                           Poly::variable(ring, j), hs.order);
        if (leibniz) {
            Poly f = Poly::constant(ring, 1);
            Poly g = Poly::constant(ring, 1);
            for (std::size_t i = 0; i < ring->nvars(); ++i) {
                f += Poly::variable(ring, i);
                g = g * Poly::variable(ring, i);
            }
            leibniz = hs_check_leibniz(hs, f, g, hs.order);
        }
        bool iter = hs_check_iterativity(hs);
        bool ok = leibniz && iter;
        emit(name,
             std::string("leibniz ") + (leibniz ? "ok" : "FAIL") + ", iterativity " +
                 (iter ? "ok" : "FAIL"),
             "", !ok);
    }
};

}  // namespace

Session::Session() : d_(std::make_unique<Data>()) {}
Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

void Session::load(const std::string& source) {
    auto data = std::make_unique<Data>();
    Parser parser{*data};
    std::istringstream in(source);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        Lexer lx(line, lineno);
        if (lx.at_end()) continue;  // blank or comment-only line
        parser.parse_line(lx);
    }
    d_ = std::move(data);
}

std::string Session::print() const {
    std::string out;
    for (const auto& e : d_->echo) {
        out += e;
        out += '\n';
    }
    return out;
}

RunResult Session::run(const RunOptions& opts) const {
    Exec exec{*d_, opts};
    bool errored = false;
    std::size_t err_index = 0;
    std::string err_name, err_msg;
    for (std::size_t i = 0; i < d_->items.size(); ++i) {
        try {
            std::visit([&](const auto& item) { exec(item, d_->echo[i]); }, d_->items[i]);
        } catch (const std::exception& e) {
            errored = true;
            err_index = i + 1;
            err_name = d_->echo[i];
            err_msg = e.what();
            break;
        }
    }
    bool any_failed = false;
    for (const auto& l : exec.lines) any_failed = any_failed || l.failed;
    bool ok = !errored && !any_failed;

    RunResult res;
    res.exit_code = ok ? 0 : 1;
    if (opts.json) {
        nlohmann::ordered_json doc;
        doc["results"] = nlohmann::ordered_json::array();
        for (const auto& l : exec.lines) {
            nlohmann::ordered_json r;
            r["name"] = l.name;
            r["value"] = l.value;
            r["status"] = l.status;
            r["failed"] = l.failed;
            doc["results"].push_back(r);
        }
        if (errored) {
            doc["error"] = {{"command", err_index}, {"name", err_name}, {"message", err_msg}};
        }
        doc["ok"] = ok;
        res.text = doc.dump(2) + "\n";
    } else {
        for (const auto& l : exec.lines) {
            res.text += l.name + ": " + l.value;
            if (!l.status.empty()) res.text += " [" + l.status + "]";
            if (l.failed) res.text += " [FAILED]";
            res.text += '\n';
        }
        if (errored)
            res.text += "error: command " + std::to_string(err_index) + " '" + err_name +
                        "': " + err_msg + "\n";
    }
    return res;
}

}  // namespace foliate
