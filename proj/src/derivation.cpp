#include "foliate/derivation.hpp"

#include <algorithm>

namespace foliate {

Derivation make_derivation(RingPtr ring, std::vector<Poly> images,
                           std::vector<Poly> relations) {
    if (images.size() != ring->nvars())
        throw Error("derivation needs one image per variable");
    for (const auto& im : images) require_same_ring(*im.ring(), *ring, "derivation image");
    for (const auto& r : relations) require_same_ring(*r.ring(), *ring, "derivation relation");
    return Derivation{std::move(ring), std::move(images), std::move(relations)};
}

Poly apply_derivation(const Derivation& d, const Poly& f) {
    require_same_ring(*d.ring, *f.ring(), "apply_derivation");
    Poly out(d.ring);
    for (std::size_t v = 0; v < d.ring->nvars(); ++v) {
        if (d.images[v].is_zero()) continue;
        Poly pf = f.partial(v);
        if (!pf.is_zero()) out += pf * d.images[v];
    }
    return out;
}

Poly apply_derivation_iter(const Derivation& d, const Poly& f, unsigned n) {
    Poly out = f;
    for (unsigned i = 0; i < n; ++i) out = apply_derivation(d, out);
    return out;
}

HigherDerivation make_higher_derivation(RingPtr ring, unsigned order,
                                        std::vector<std::vector<Poly>> images) {
    if (order == 0) throw Error("higher derivation order must be at least 1");
    if (images.size() != order)
        throw Error("higher derivation needs images for orders 1..M");
    for (const auto& level : images) {
        if (level.size() != ring->nvars())
            throw Error("higher derivation needs one image per variable at every order");
        for (const auto& im : level)
            require_same_ring(*im.ring(), *ring, "higher derivation image");
    }
    return HigherDerivation{std::move(ring), order, std::move(images)};
}

mpq_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return mpq_class(r);
}

HigherDerivation hs_from_derivation(const Derivation& d, unsigned order) {
    if (d.ring->char_p != 0)
        throw Error("hs_from_derivation requires a rational coefficient field");
    std::vector<std::vector<Poly>> images(order);
    mpz_class factorial = 1;
    std::vector<Poly> current;
    current.reserve(d.ring->nvars());
    for (std::size_t v = 0; v < d.ring->nvars(); ++v)
        current.push_back(Poly::variable(d.ring, v));
    for (unsigned i = 1; i <= order; ++i) {
        factorial *= i;
        images[i - 1].reserve(current.size());
        for (auto& p : current) p = apply_derivation(d, p);
        for (const auto& p : current)
            images[i - 1].push_back(p.scaled(mpq_class(1) / mpq_class(factorial)));
    }
    return HigherDerivation{d.ring, order, std::move(images)};
}

namespace {

/* D_j applied to a single variable: identity at j = 0. */
const Poly& hs_var_image(const HigherDerivation& hs, unsigned j, std::size_t v,
                         std::vector<Poly>& id_cache) {
    if (j == 0) {
        if (id_cache.empty())
            for (std::size_t w = 0; w < hs.ring->nvars(); ++w)
                id_cache.push_back(Poly::variable(hs.ring, w));
        return id_cache[v];
    }
    return hs.images[j - 1][v];
}

}  // namespace

Poly hs_apply(const HigherDerivation& hs, unsigned i, const Poly& f) {
    require_same_ring(*hs.ring, *f.ring(), "hs_apply");
    if (i > hs.order) throw Error("hs_apply beyond truncation order");
    if (i == 0) return f;
    std::vector<Poly> id_cache;
    // per-variable power tables: pow_tab[v][e][j] = D_j(x_v^e); filled on demand
    std::vector<std::vector<std::vector<Poly>>> pow_tab(hs.ring->nvars());
    auto var_power = [&](std::size_t v, unsigned e) -> const std::vector<Poly>& {
        auto& tab = pow_tab[v];
        if (tab.empty()) {
            // e = 0: D_0(1) = 1, D_j(1) = 0
            std::vector<Poly> unit;
            unit.push_back(Poly::constant(hs.ring, 1));
            for (unsigned j = 1; j <= i; ++j) unit.push_back(Poly(hs.ring));
            tab.push_back(std::move(unit));
        }
        while (tab.size() <= e) {
            // Leibniz on x * x^(e-1)
            const auto& prev = tab.back();
            std::vector<Poly> cur;
            for (unsigned j = 0; j <= i; ++j) {
                Poly acc(hs.ring);
                for (unsigned k = 0; k <= j; ++k) {
                    const Poly& dx = hs_var_image(hs, k, v, id_cache);
                    if (dx.is_zero() || prev[j - k].is_zero()) continue;
                    acc += dx * prev[j - k];
                }
                cur.push_back(std::move(acc));
            }
            tab.push_back(std::move(cur));
        }
        return tab[e];
    };

    Poly out(hs.ring);
    for (const auto& [e, c] : f.terms()) {
        // convolve D over the variable powers of this monomial
        std::vector<Poly> conv;
        conv.push_back(Poly::constant(hs.ring, 1));
        for (unsigned j = 1; j <= i; ++j) conv.push_back(Poly(hs.ring));
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            const auto& tab = var_power(v, e[v]);
            std::vector<Poly> nxt;
            for (unsigned j = 0; j <= i; ++j) {
                Poly acc(hs.ring);
                for (unsigned k = 0; k <= j; ++k) {
                    if (conv[k].is_zero() || tab[j - k].is_zero()) continue;
                    acc += conv[k] * tab[j - k];
                }
                nxt.push_back(std::move(acc));
            }
            conv = std::move(nxt);
        }
        out += conv[i].scaled(c);
    }
    return out;
}

bool hs_check_leibniz(const HigherDerivation& hs, const Poly& f, const Poly& g,
                      unsigned up_to) {
    up_to = std::min(up_to, hs.order);
    Poly fg = f * g;
    for (unsigned i = 0; i <= up_to; ++i) {
        Poly lhs = hs_apply(hs, i, fg);
        Poly rhs(hs.ring);
        for (unsigned k = 0; k <= i; ++k) {
            Poly a = hs_apply(hs, k, f);
            Poly b = hs_apply(hs, i - k, g);
            if (!a.is_zero() && !b.is_zero()) rhs += a * b;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool hs_check_iterativity(const HigherDerivation& hs) {
    for (unsigned i = 1; i <= hs.order; ++i) {
        for (unsigned j = 1; i + j <= hs.order; ++j) {
            mpq_class c = hs.ring->normalize(binomial(i + j, i));
            for (std::size_t v = 0; v < hs.ring->nvars(); ++v) {
                Poly lhs = hs_apply(hs, i, hs.images[j - 1][v]);
                Poly rhs = hs.images[i + j - 1][v].scaled(c);
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

}  // namespace foliate
