#include "foliate/poly.hpp"

#include <algorithm>

#include "foliate/order.hpp"

namespace foliate {

Poly::Poly(RingPtr ring, TermMap terms) : ring_(std::move(ring)) {
    for (auto& [e, c] : terms) {
        if (e.size() != ring_->nvars())
            throw Error("exponent vector length does not match ring");
        insert_term(e, c);
    }
}

Poly Poly::constant(const RingPtr& ring, const mpq_class& c) {
    Poly p(ring);
    p.insert_term(Expv(ring->nvars(), 0), c);
    return p;
}

Poly Poly::variable(const RingPtr& ring, std::size_t v) {
    if (v >= ring->nvars()) throw Error("variable index out of range");
    Expv e(ring->nvars(), 0);
    e[v] = 1;
    Poly p(ring);
    p.insert_term(std::move(e), 1);
    return p;
}

Poly Poly::monomial(const RingPtr& ring, Expv e, const mpq_class& c) {
    if (e.size() != ring->nvars()) throw Error("exponent vector length does not match ring");
    Poly p(ring);
    p.insert_term(std::move(e), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

long Poly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, long(total_degree(e)));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

mpq_class Poly::coeff(const Expv& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly::insert_term(Expv e, mpq_class c) {
    c = ring_->normalize(std::move(c));
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
        it->second = ring_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_->neg(c));
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(*ring_, *o.ring_, "poly add");
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(*ring_, *o.ring_, "poly sub");
    for (const auto& [e, c] : o.terms_) insert_term(e, ring_->neg(c));
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*ring_, *o.ring_, "poly mul");
    Poly r(ring_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Expv e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.insert_term(std::move(e), c1 * c2);
        }
    }
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    Poly r(ring_);
    mpq_class cc = ring_->normalize(c);
    if (cc == 0) return r;
    for (const auto& [e, c0] : terms_) r.insert_term(e, c0 * cc);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(ring_, 1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_ring(*ring_, *o.ring_, "poly compare");
    return terms_ == o.terms_;
}

Poly Poly::partial(std::size_t v) const {
    if (v >= ring_->nvars()) throw Error("variable index out of range");
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expv d = e;
        d[v] -= 1;
        r.insert_term(std::move(d), c * long(e[v]));
    }
    return r;
}

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars())
        throw Error("substitute: need one image per variable");
    for (const auto& im : images)
        require_same_ring(*im.ring(), *target, "substitute");
    // memoized powers per variable
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t v, unsigned n) -> const Poly& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Poly::constant(target, 1));
        while (tab.size() <= n) tab.push_back(tab.back() * images[v]);
        return tab[n];
    };
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t = t * power(v, e[v]);
        r += t;
    }
    return r;
}

Poly Poly::transport(const RingPtr& target, const std::vector<long>& var_map) const {
    if (var_map.size() != ring_->nvars())
        throw Error("transport: map length does not match ring");
    if (ring_->char_p != target->char_p)
        throw Error("transport: field mismatch");
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Expv t(target->nvars(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (var_map[v] < 0)
                throw Error("transport: polynomial uses variable '" + ring_->vars[v] +
                            "' outside the target ring");
            t[std::size_t(var_map[v])] += e[v];
        }
        r.insert_term(std::move(t), c);
    }
    return r;
}

Poly Poly::substitute_cleared(const RingPtr& target, const std::vector<Poly>& num,
                              const Poly& den, unsigned clear_to) const {
    if (long(clear_to) < degree())
        throw Error("substitute_cleared: clearing degree below polynomial degree");
    std::vector<std::vector<Poly>> powers(num.size());
    auto power = [&](std::size_t v, unsigned n) -> const Poly& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Poly::constant(target, 1));
        while (tab.size() <= n) tab.push_back(tab.back() * num[v]);
        return tab[n];
    };
    std::vector<Poly> dpow;
    auto dpower = [&](unsigned n) -> const Poly& {
        if (dpow.empty()) dpow.push_back(Poly::constant(target, 1));
        while (dpow.size() <= n) dpow.push_back(dpow.back() * den);
        return dpow[n];
    };
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t = t * power(v, e[v]);
        r += t * dpower(clear_to - total_degree(e));
    }
    return r;
}

bool poly_canonical_less(const Poly& a, const Poly& b) {
    MonomialOrder ord;  // degrevlex
    auto ta = ordered_terms(a, ord);
    auto tb = ordered_terms(b, ord);
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = ord.cmp(ta[i].first, tb[i].first);
        if (c != 0) return c < 0;
        if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
    }
    return ta.size() < tb.size();
}

}  // namespace foliate
