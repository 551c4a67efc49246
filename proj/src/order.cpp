#include "foliate/order.hpp"

#include <algorithm>

namespace foliate {

namespace {

int cmp_degrevlex(const Expv& a, const Expv& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // equal degree: the one with the larger exponent at the last differing
    // position is the smaller monomial
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Expv& a, const Expv& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Expv& a, const Expv& b) const {
    switch (kind) {
        case Kind::Degrevlex:
            return cmp_degrevlex(a, b, 0, a.size());
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::Block: {
            int c = cmp_degrevlex(a, b, 0, std::min(elim, a.size()));
            if (c != 0) return c;
            return cmp_degrevlex(a, b, std::min(elim, a.size()), a.size());
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind) {
        case Kind::Degrevlex:
            return "drl";
        case Kind::Lex:
            return "lex";
        case Kind::Block:
            return "blk" + std::to_string(elim);
    }
    return "?";
}

std::vector<Term> ordered_terms(const Poly& p, const MonomialOrder& ord) {
    std::vector<Term> out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(),
              [&](const Term& x, const Term& y) { return ord.cmp(x.first, y.first) > 0; });
    return out;
}

Term leading_term(const Poly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw Error("leading term of zero polynomial");
    auto it = p.terms().begin();
    const Expv* best = &it->first;
    for (auto j = std::next(it); j != p.terms().end(); ++j)
        if (ord.cmp(j->first, *best) > 0) best = &j->first;
    return {*best, p.terms().at(*best)};
}

}  // namespace foliate
