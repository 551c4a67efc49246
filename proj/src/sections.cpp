#include "foliate/sections.hpp"

#include <numeric>
#include <sstream>

#include "foliate/error.hpp"
#include "foliate/format.hpp"

namespace foliate {

namespace {

Ideal domain_saturation(const AffineDiffScheme& X, const Poly& b) {
    return saturation(X.relations, b);
}

bool empty_domain(const AffineDiffScheme& X, const Poly& b) {
    return radical_member(b, X.relations);
}

/* Exact square test by leading-term root extraction under degrevlex. */
bool is_exact_square(const Poly& g) {
    if (g.is_zero() || g.is_constant()) return false;
    if (g.ring()->char_p == 2) return false;  // 2 not invertible; skip (check is partial)
    MonomialOrder ord;
    auto [le, lc] = leading_term(g, ord);
    Expv he(le.size());
    for (std::size_t v = 0; v < le.size(); ++v) {
        if (le[v] % 2) return false;
        he[v] = le[v] / 2;
    }
    if (g.ring()->char_p == 0 && lc < 0) return false;
    mpq_class hc = lc;  // square root of the leading coefficient, if any
    if (g.ring()->char_p == 0) {
        mpz_class num = hc.get_num(), den = hc.get_den(), rn, rd;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0) return false;
        if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0) return false;
        hc = mpq_class(rn, rd);
    } else {
        bool found = false;
        for (unsigned r = 0; r < g.ring()->char_p && !found; ++r)
            if (g.ring()->normalize(mpq_class(r) * r) == lc) {
                hc = r;
                found = true;
            }
        if (!found) return false;
    }
    Poly h = Poly::monomial(g.ring(), he, hc);
    Poly r = g - h * h;
    while (!r.is_zero()) {
        auto [re, rc] = leading_term(r, ord);
        Expv te(re.size());
        for (std::size_t v = 0; v < re.size(); ++v) {
            if (re[v] < he[v]) return false;
            te[v] = re[v] - he[v];
        }
        if (ord.cmp(te, he) >= 0) return false;  // quotient no longer descends
        Poly t = Poly::monomial(g.ring(), te, g.ring()->div(rc, g.ring()->from_int(2) * hc));
        h += t;
        r = g - h * h;
    }
    return true;
}

bool is_monomial_power(const Poly& g) {
    if (g.term_count() != 1) return false;
    const Expv& e = g.terms().begin()->first;
    unsigned gcd = 0;
    for (unsigned x : e) gcd = std::gcd(gcd, x);
    return gcd >= 2;
}

}  // namespace

bool vanishes_on_basic_open(const AffineDiffScheme& X, const Poly& w, const Poly& b) {
    return ideal_member(w, domain_saturation(X, b));
}

bool vanishes_on_basic_open_radical(const AffineDiffScheme& X, const Poly& w, const Poly& b) {
    return radical_member(w, domain_saturation(X, b));
}

bool relations_look_reduced(const AffineDiffScheme& X) {
    for (const auto& g : X.relations.gens())
        if (is_monomial_power(g) || is_exact_square(g)) return false;
    return true;
}

bool is_constant_fraction(const AffineDiffScheme& X, const Poly& num, const Poly& den) {
    require_same_ring(*X.ring, *num.ring(), "is_constant_fraction");
    require_same_ring(*X.ring, *den.ring(), "is_constant_fraction");
    if (empty_domain(X, den))
        throw Error("constant test: the fraction's domain is empty (denominator \"" +
                    print_poly(den) + "\" vanishes on the whole scheme)");
    Poly w = apply_derivation(X.der, num) * den - num * apply_derivation(X.der, den);
    return vanishes_on_basic_open(X, w, den);
}

std::string SectionCertificate::to_text() const {
    std::ostringstream os;
    for (const auto& p : pairs)
        os << "  patch " << p.i << " ~ patch " << p.j << ": "
           << (p.compatible ? "compatible" : "INCOMPATIBLE") << "\n";
    for (std::size_t i = 0; i < patch_constant.size(); ++i)
        os << "  patch " << i << ": " << (patch_constant[i] ? "constant" : "NOT CONSTANT")
           << "\n";
    return os.str();
}

SectionCertificate validate_kovacic_section(const FractionSection& s, bool check_constancy) {
    const auto& X = s.scheme;
    SectionCertificate cert;
    for (std::size_t i = 0; i < s.patches.size(); ++i)
        for (std::size_t j = i + 1; j < s.patches.size(); ++j) {
            const auto& p = s.patches[i];
            const auto& q = s.patches[j];
            Poly w = p.num * q.den - q.num * p.den;
            bool ok = vanishes_on_basic_open_radical(X, w, p.den * q.den);
            cert.pairs.push_back({i, j, ok});
            cert.all_compatible = cert.all_compatible && ok;
        }
    if (check_constancy)
        for (const auto& p : s.patches) {
            bool c = empty_domain(X, p.den) ||
                     vanishes_on_basic_open(
                         X,
                         apply_derivation(X.der, p.num) * p.den -
                             p.num * apply_derivation(X.der, p.den),
                         p.den);
            cert.patch_constant.push_back(c);
            cert.all_constant = cert.all_constant && c;
        }
    return cert;
}

ExtensionResult extend_constant(const AffineDiffScheme& X, const Poly& num, const Poly& den,
                                unsigned max_order) {
    if (!is_constant_fraction(X, num, den))
        throw Error("extend: the fraction is not constant on its domain");

    ExtensionResult res;
    res.section.scheme = X;
    Poly a = num, b = den;
    std::vector<Poly> dens;
    for (unsigned n = 0; n <= max_order; ++n) {
        if (n > 0) {
            a = apply_derivation(X.der, a);
            b = apply_derivation(X.der, b);
        }
        if (!empty_domain(X, b)) {
            res.section.patches.push_back({a, b});
            res.orders.push_back(n);
            dens.push_back(b);
        }
    }

    res.compatibility = validate_kovacic_section(res.section);
    if (!res.compatibility.all_compatible) {
        for (const auto& p : res.compatibility.pairs)
            if (!p.compatible)
                throw Error("extend: patches of order " + std::to_string(res.orders[p.i]) +
                            " and " + std::to_string(res.orders[p.j]) +
                            " disagree on their overlap; is the scheme reduced?");
    }

    res.closure = diff_closure(ideal_sum(Ideal(X.ring, {den}), X.relations), X.der);
    res.covers_u_delta =
        ideal_equal_radical(ideal_sum(Ideal(X.ring, dens), X.relations), res.closure.closure);
    return res;
}

ConstantsComparisonReport constants_comparison_report(const AffineDiffScheme& X, const Poly& b,
                                                      const std::vector<FractionPatch>& fractions,
                                                      unsigned max_order) {
    ConstantsComparisonReport rep;
    rep.domain_gen = b;
    for (std::size_t idx = 0; idx < fractions.size(); ++idx) {
        const auto& fr = fractions[idx];
        RoundTripCheck rt;
        rt.entry = idx;
        Poly w = apply_derivation(X.der, fr.num) * fr.den -
                 fr.num * apply_derivation(X.der, fr.den);
        rt.constant_on_domain = vanishes_on_basic_open(X, w, b * fr.den);
        try {
            ExtensionResult ext = extend_constant(X, fr.num, fr.den, max_order);

            rt.restriction_matches = true;
            for (const auto& p : ext.section.patches) {
                Poly diff = p.num * fr.den - fr.num * p.den;
                if (!vanishes_on_basic_open_radical(X, diff, fr.den * p.den))
                    rt.restriction_matches = false;
            }

            rt.extension_stable = true;
            for (const auto& p : ext.section.patches) {
                ExtensionResult again = extend_constant(X, p.num, p.den, max_order);
                for (const auto& q : again.section.patches)
                    for (const auto& r : ext.section.patches) {
                        Poly diff = q.num * r.den - r.num * q.den;
                        if (!vanishes_on_basic_open_radical(X, diff, r.den * q.den))
                            rt.extension_stable = false;
                    }
            }
        } catch (const Error&) {
            rt.restriction_matches = false;
            rt.extension_stable = false;
        }
        rep.all_ok = rep.all_ok && rt.ok();
        rep.entries.push_back(rt);
    }
    return rep;
}

}  // namespace foliate
