#include "foliate/groebner.hpp"

#include <algorithm>
#include <set>

namespace foliate {

namespace {

bool divides(const Expv& a, const Expv& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expv exp_sub(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Expv exp_lcm(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Expv exp_add(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/* Working form: terms sorted descending under the active order. */
struct OP {
    std::vector<Term> t;
    bool zero() const { return t.empty(); }
    const Expv& lm() const { return t.front().first; }
    const mpq_class& lc() const { return t.front().second; }
};

OP op_from_poly(const Poly& p, const MonomialOrder& ord) {
    return OP{ordered_terms(p, ord)};
}

Poly op_to_poly(const RingPtr& ring, const OP& f) {
    Poly::TermMap m;
    for (const auto& [e, c] : f.t) m.emplace(e, c);
    return Poly(ring, std::move(m));
}

/* f -= c * x^shift * g, merging the two sorted term lists. */
OP op_axpy(const Ring& F, const OP& f, const mpq_class& c, const Expv& shift, const OP& g,
           const MonomialOrder& ord) {
    OP out;
    out.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    Expv ge;
    if (!g.t.empty()) ge = exp_add(g.t[0].first, shift);
    while (i < f.t.size() || j < g.t.size()) {
        int side;  // <0: take f term, 0: merge, >0: take shifted g term
        if (i == f.t.size())
            side = 1;
        else if (j == g.t.size())
            side = -1;
        else
            side = ord.cmp(ge, f.t[i].first);
        if (side < 0) {
            out.t.push_back(f.t[i++]);
        } else if (side == 0) {
            mpq_class nc = F.sub(f.t[i].second, F.mul(c, g.t[j].second));
            if (nc != 0) out.t.emplace_back(ge, std::move(nc));
            ++i;
            ++j;
            if (j < g.t.size()) ge = exp_add(g.t[j].first, shift);
        } else {
            out.t.emplace_back(ge, F.neg(F.mul(c, g.t[j].second)));
            ++j;
            if (j < g.t.size()) ge = exp_add(g.t[j].first, shift);
        }
    }
    return out;
}

struct BasisElem {
    OP p;  // monic
};

/* Full normal form of f against basis (first-divisor strategy). */
OP op_reduce(const Ring& F, OP f, const std::vector<BasisElem>& basis,
             const MonomialOrder& ord) {
    OP out;
    while (!f.zero()) {
        const Expv& lm = f.lm();
        const BasisElem* hit = nullptr;
        for (const auto& b : basis) {
            if (divides(b.p.lm(), lm)) {
                hit = &b;
                break;
            }
        }
        if (!hit) {
            out.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
            continue;
        }
        mpq_class c = f.lc();  // basis is monic
        f = op_axpy(F, f, c, exp_sub(lm, hit->p.lm()), hit->p, ord);
    }
    return out;
}

struct Pair {
    Expv lcm;
    unsigned deg;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        int c = ord->cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/* Shared driver for the tracked and untracked builds.
   TrackHook is called as integrate(index_in_cohort, remainder_op) and must
   return the (possibly re-reduced) remainder to install. */
struct Engine {
    const RingPtr& ring;
    const Ring& F;
    MonomialOrder ord;
    GOpts opts;
    std::vector<BasisElem> basis;
    std::set<Pair, PairLess> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_idx;

    Engine(const RingPtr& r, const MonomialOrder& o, const GOpts& op)
        : ring(r), F(*r), ord(o), opts(op), pending(PairLess{&ord}) {}

    void push_pairs_for(std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Expv l = exp_lcm(basis[i].p.lm(), basis[k].p.lm());
            unsigned d = total_degree(l);
            if (opts.degree_cap && d > *opts.degree_cap) continue;
            pending.insert(Pair{std::move(l), d, i, k});
            pending_idx.insert({i, k});
        }
    }

    bool coprime(const Pair& pr) const {
        return exp_lcm(basis[pr.i].p.lm(), basis[pr.j].p.lm()) ==
               exp_add(basis[pr.i].p.lm(), basis[pr.j].p.lm());
    }

    bool chain_redundant(const Pair& pr) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[k].p.lm(), pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (!pending_idx.count({key1.first, key1.second}) &&
                !pending_idx.count({key2.first, key2.second}))
                return true;
        }
        return false;
    }

    OP spoly(const Pair& pr) const {
        const OP& f = basis[pr.i].p;
        const OP& g = basis[pr.j].p;
        // both monic: x^(lcm-lm f) f - x^(lcm-lm g) g
        OP sf;
        Expv shf = exp_sub(pr.lcm, f.lm());
        sf.t.reserve(f.t.size());
        for (const auto& [e, c] : f.t) sf.t.emplace_back(exp_add(e, shf), c);
        return op_axpy(F, sf, mpq_class(1), exp_sub(pr.lcm, g.lm()), g, ord);
    }
};

void minimalize_indices(const std::vector<BasisElem>& basis, const MonomialOrder& ord,
                        std::vector<std::size_t>& keep) {
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = ord.cmp(basis[a].p.lm(), basis[b].p.lm());
        if (c != 0) return c < 0;
        return a < b;
    });
    for (std::size_t cand : idx) {
        bool dominated = false;
        for (std::size_t k : keep)
            if (divides(basis[k].p.lm(), basis[cand].p.lm())) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(cand);
    }
}

}  // namespace

std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                             const MonomialOrder& ord, const GOpts& opts) {
    Engine eng(ring, ord, opts);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(*ring, *g.ring(), "buchberger");
        OP op = op_from_poly(g, ord);
        mpq_class inv = eng.F.inv(op.lc());
        for (auto& [e, c] : op.t) c = eng.F.mul(c, inv);
        eng.basis.push_back(BasisElem{std::move(op)});
        eng.push_pairs_for(eng.basis.size() - 1);
    }

    while (!eng.pending.empty()) {
        // one cohort: every pending pair sharing the minimal lcm degree
        unsigned d = eng.pending.begin()->deg;
        for (auto it = eng.pending.begin(); it != eng.pending.end(); ++it)
            d = std::min(d, it->deg);
        // Decide each pair of the cohort in order, removing it from pending
        // only at its own decision point.  The chain criterion treats absence
        // from pending as "already handled", so deciding sequentially keeps
        // the citations acyclic; batch removal would let two cohort mates
        // discard each other and lose their S-polynomials.
        std::vector<Pair> work;
        for (auto it = eng.pending.begin(); it != eng.pending.end();) {
            if (it->deg != d) {
                ++it;
                continue;
            }
            Pair pr = *it;
            eng.pending_idx.erase({pr.i, pr.j});
            it = eng.pending.erase(it);
            if (eng.coprime(pr)) continue;
            if (eng.chain_redundant(pr)) continue;
            work.push_back(std::move(pr));
        }
        std::vector<OP> remainders(work.size());
        const long n = long(work.size());
#pragma omp parallel for schedule(dynamic) if (eng.opts.parallel && n > 1)
        for (long w = 0; w < n; ++w)
            remainders[std::size_t(w)] =
                op_reduce(eng.F, eng.spoly(work[std::size_t(w)]), eng.basis, eng.ord);
        for (std::size_t w = 0; w < work.size(); ++w) {
            // catch up on elements added earlier in this cohort
            OP r = op_reduce(eng.F, std::move(remainders[w]), eng.basis, eng.ord);
            if (r.zero()) continue;
            mpq_class inv = eng.F.inv(r.lc());
            for (auto& [e, c] : r.t) c = eng.F.mul(c, inv);
            eng.basis.push_back(BasisElem{std::move(r)});
            eng.push_pairs_for(eng.basis.size() - 1);
        }
    }

    // minimalize + tail-reduce -> the reduced basis
    std::vector<std::size_t> keep;
    minimalize_indices(eng.basis, ord, keep);
    std::vector<BasisElem> reduced;
    for (std::size_t pass = 0; pass < keep.size(); ++pass) {
        // reduce each element against all other kept elements
        std::vector<BasisElem> others;
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (k != pass) others.push_back(eng.basis[keep[k]]);
        OP r = op_reduce(eng.F, eng.basis[keep[pass]].p, others, ord);
        if (r.zero()) continue;  // cannot happen for a minimal basis
        mpq_class inv = eng.F.inv(r.lc());
        for (auto& [e, c] : r.t) c = eng.F.mul(c, inv);
        reduced.push_back(BasisElem{std::move(r)});
    }
    std::sort(reduced.begin(), reduced.end(), [&](const BasisElem& a, const BasisElem& b) {
        return ord.cmp(a.p.lm(), b.p.lm()) < 0;
    });
    std::vector<Poly> out;
    out.reserve(reduced.size());
    for (const auto& b : reduced) out.push_back(op_to_poly(ring, b.p));
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    if (basis.empty()) return f;
    const RingPtr& ring = f.ring();
    std::vector<BasisElem> bes;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        OP op = op_from_poly(g, ord);
        mpq_class inv = ring->inv(op.lc());
        for (auto& [e, c] : op.t) c = ring->mul(c, inv);
        bes.push_back(BasisElem{std::move(op)});
    }
    return op_to_poly(ring, op_reduce(*ring, op_from_poly(f, ord), bes, ord));
}

/* ------------------------------------------------------------------ */
/* Tracked engine: every working polynomial carries its expression in
   the original generators.  Serial; used where certificates matter.  */

namespace {

struct TP {
    OP p;
    std::vector<Poly> cof;  // over the original generators
};

void tp_scale(const Ring& F, TP& f, const mpq_class& c) {
    for (auto& [e, v] : f.p.t) v = F.mul(v, c);
    for (auto& q : f.cof) q = q.scaled(c);
}

/* f -= c * x^shift * g (tracked). */
void tp_axpy(const RingPtr& ring, const MonomialOrder& ord, TP& f, const mpq_class& c,
             const Expv& shift, const TP& g) {
    f.p = op_axpy(*ring, f.p, c, shift, g.p, ord);
    Poly mono = Poly::monomial(ring, shift, ring->neg(c));
    for (std::size_t t = 0; t < f.cof.size(); ++t)
        if (!g.cof[t].is_zero()) f.cof[t] += mono * g.cof[t];
}

/* Full tracked normal form against a tracked basis. */
TP tp_reduce(const RingPtr& ring, const MonomialOrder& ord, TP f,
             const std::vector<TP>& basis) {
    OP out;
    while (!f.p.zero()) {
        const Expv& lm = f.p.lm();
        const TP* hit = nullptr;
        for (const auto& b : basis) {
            if (divides(b.p.lm(), lm)) {
                hit = &b;
                break;
            }
        }
        if (!hit) {
            out.t.push_back(f.p.t.front());
            f.p.t.erase(f.p.t.begin());
            continue;
        }
        mpq_class c = f.p.lc();  // basis monic
        tp_axpy(ring, ord, f, c, exp_sub(lm, hit->p.lm()), *hit);
    }
    f.p = std::move(out);
    return f;
}

}  // namespace

TrackedBasis buchberger_tracked(const RingPtr& ring, const std::vector<Poly>& gens,
                                const MonomialOrder& ord, const GOpts& opts) {
    const Ring& F = *ring;
    std::vector<TP> basis;
    std::set<Pair, PairLess> pending{PairLess{&ord}};
    std::set<std::pair<std::size_t, std::size_t>> pending_idx;

    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Expv l = exp_lcm(basis[i].p.lm(), basis[k].p.lm());
            unsigned d = total_degree(l);
            if (opts.degree_cap && d > *opts.degree_cap) continue;
            pending.insert(Pair{std::move(l), d, i, k});
            pending_idx.insert({i, k});
        }
    };

    for (std::size_t t = 0; t < gens.size(); ++t) {
        if (gens[t].is_zero()) continue;
        require_same_ring(*ring, *gens[t].ring(), "buchberger_tracked");
        TP tp;
        tp.p = op_from_poly(gens[t], ord);
        tp.cof.assign(gens.size(), Poly(ring));
        tp.cof[t] = Poly::constant(ring, 1);
        tp_scale(F, tp, F.inv(tp.p.lc()));
        basis.push_back(std::move(tp));
        push_pairs_for(basis.size() - 1);
    }

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({pr.i, pr.j});
        // coprime criterion
        if (exp_lcm(basis[pr.i].p.lm(), basis[pr.j].p.lm()) ==
            exp_add(basis[pr.i].p.lm(), basis[pr.j].p.lm()))
            continue;
        // chain criterion
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[k].p.lm(), pr.lcm)) continue;
            auto k1 = std::minmax(pr.i, k);
            auto k2 = std::minmax(pr.j, k);
            if (!pending_idx.count({k1.first, k1.second}) &&
                !pending_idx.count({k2.first, k2.second}))
                redundant = true;
        }
        if (redundant) continue;

        TP s;
        {
            const TP& f = basis[pr.i];
            Expv shf = exp_sub(pr.lcm, f.p.lm());
            s.p.t.reserve(f.p.t.size());
            for (const auto& [e, c] : f.p.t) s.p.t.emplace_back(exp_add(e, shf), c);
            Poly mono = Poly::monomial(ring, shf, mpq_class(1));
            s.cof.reserve(f.cof.size());
            for (const auto& q : f.cof) s.cof.push_back(mono * q);
            tp_axpy(ring, ord, s, mpq_class(1), exp_sub(pr.lcm, basis[pr.j].p.lm()),
                    basis[pr.j]);
        }
        TP r = tp_reduce(ring, ord, std::move(s), basis);
        if (r.p.zero()) continue;
        tp_scale(F, r, F.inv(r.p.lc()));
        basis.push_back(std::move(r));
        push_pairs_for(basis.size() - 1);
    }

    std::vector<BasisElem> plain;
    plain.reserve(basis.size());
    for (const auto& b : basis) plain.push_back(BasisElem{b.p});
    std::vector<std::size_t> keep;
    minimalize_indices(plain, ord, keep);

    std::vector<TP> reduced;
    for (std::size_t pass = 0; pass < keep.size(); ++pass) {
        std::vector<TP> others;
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (k != pass) others.push_back(basis[keep[k]]);
        TP r = tp_reduce(ring, ord, basis[keep[pass]], others);
        if (r.p.zero()) continue;
        tp_scale(F, r, F.inv(r.p.lc()));
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TP& a, const TP& b) {
        return ord.cmp(a.p.lm(), b.p.lm()) < 0;
    });

    TrackedBasis out;
    out.ring = ring;
    out.ord = ord;
    for (auto& b : reduced) {
        out.basis.push_back(op_to_poly(ring, b.p));
        out.cof.push_back(std::move(b.cof));
    }
    return out;
}

TrackedNF normal_form_tracked(const Poly& f, const TrackedBasis& tb) {
    const RingPtr& ring = tb.ring;
    require_same_ring(*ring, *f.ring(), "normal_form_tracked");
    std::size_t ngens = tb.cof.empty() ? 0 : tb.cof.front().size();
    // tracked reduction against the basis, cofactors over the basis itself
    std::vector<TP> basis;
    basis.reserve(tb.basis.size());
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
        TP tp;
        tp.p = op_from_poly(tb.basis[k], tb.ord);
        tp.cof.assign(tb.basis.size(), Poly(ring));
        tp.cof[k] = Poly::constant(ring, 1);
        basis.push_back(std::move(tp));
    }
    TP start;
    start.p = op_from_poly(f, tb.ord);
    start.cof.assign(tb.basis.size(), Poly(ring));
    TP red = tp_reduce(ring, tb.ord, std::move(start), basis);

    TrackedNF out;
    out.remainder = op_to_poly(ring, red.p);
    out.cof.assign(ngens, Poly(ring));
    // compose: f = sum_k q_k basis_k + r, basis_k = sum_t cof_k_t gen_t.
    // tp_reduce tracks f - sum q_k basis_k, so negate the quotients.
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
        if (red.cof[k].is_zero()) continue;
        Poly q = -red.cof[k];
        for (std::size_t t = 0; t < ngens; ++t)
            if (!tb.cof[k][t].is_zero()) out.cof[t] += q * tb.cof[k][t];
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* Ideal and the derived operations. */

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : impl_(std::make_shared<Impl>()) {
    impl_->ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(*impl_->ring, *g.ring(), "ideal");
        impl_->gens.push_back(std::move(g));
    }
}

const std::vector<Poly>& Ideal::groebner_basis(const MonomialOrder& ord) const {
    if (!impl_) throw Error("empty ideal handle");
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->cache.find(ord.key());
    if (it == impl_->cache.end()) {
        auto gb = std::make_shared<const std::vector<Poly>>(
            buchberger(impl_->ring, impl_->gens, ord));
        it = impl_->cache.emplace(ord.key(), std::move(gb)).first;
    }
    return *it->second;
}

bool Ideal::is_zero() const { return impl_->gens.empty(); }

bool Ideal::is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
}

bool ideal_member(const Poly& f, const Ideal& I) {
    return normal_form(f, I.groebner_basis()).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
    for (const auto& g : small.gens())
        if (!ideal_member(g, big)) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    return ideal_contains(a, b) && ideal_contains(b, a);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring(), "ideal_sum");
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring(), "ideal_product");
    std::vector<Poly> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

std::string fresh_var_name(const Ring& ring, const std::string& stem) {
    std::string name = stem;
    unsigned n = 0;
    while (ring.var_index(name)) name = stem + "_" + std::to_string(n++);
    return name;
}

namespace {

/* Ring with `extra` fresh variables prepended; maps to transport back and forth. */
struct ExtendedRing {
    RingPtr ring;
    std::vector<long> into;  // old var v -> index in extended ring
    std::vector<long> back;  // extended var -> old index or -1
};

ExtendedRing extend_ring(const RingPtr& base, const std::vector<std::string>& stems) {
    std::vector<std::string> vars;
    for (const auto& s : stems) {
        std::string name = s;
        unsigned n = 0;
        while (base->var_index(name) ||
               std::find(vars.begin(), vars.end(), name) != vars.end())
            name = s + "_" + std::to_string(n++);
        vars.push_back(name);
    }
    std::size_t extra = vars.size();
    for (const auto& v : base->vars) vars.push_back(v);
    ExtendedRing ext;
    ext.ring = make_ring(base->char_p, std::move(vars));
    ext.into.resize(base->nvars());
    for (std::size_t v = 0; v < base->nvars(); ++v) ext.into[v] = long(extra + v);
    ext.back.assign(ext.ring->nvars(), -1);
    for (std::size_t v = 0; v < base->nvars(); ++v) ext.back[extra + v] = long(v);
    return ext;
}

/* GB elements free of the first `nfirst` variables, transported to `target`
   via var_map; assumes a block order with those variables dominant was used. */
std::vector<Poly> filter_restrict(const std::vector<Poly>& gb, std::size_t nfirst,
                                  const RingPtr& target, const std::vector<long>& var_map) {
    std::vector<Poly> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [e, c] : g.terms()) {
            for (std::size_t v = 0; v < nfirst && pure; ++v)
                if (e[v]) pure = false;
            if (!pure) break;
        }
        if (pure) out.push_back(g.transport(target, var_map));
    }
    return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring(), "ideal_intersect");
    const RingPtr& R = a.ring();
    ExtendedRing ext = extend_ring(R, {"t"});
    Poly t = Poly::variable(ext.ring, 0);
    Poly one_minus_t = Poly::constant(ext.ring, 1) - t;
    std::vector<Poly> gens;
    for (const auto& f : a.gens()) gens.push_back(t * f.transport(ext.ring, ext.into));
    for (const auto& g : b.gens())
        gens.push_back(one_minus_t * g.transport(ext.ring, ext.into));
    auto gb = buchberger(ext.ring, gens, MonomialOrder::block(1));
    return Ideal(R, filter_restrict(gb, 1, R, ext.back));
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& drop) {
    const RingPtr& R = I.ring();
    std::vector<bool> dropped(R->nvars(), false);
    for (std::size_t v : drop) {
        if (v >= R->nvars()) throw Error("elimination_ideal: variable index out of range");
        dropped[v] = true;
    }
    // permuted ring: dropped vars first (original relative order), then the rest
    std::vector<std::string> vars;
    std::vector<long> into(R->nvars(), -1);
    for (std::size_t v = 0; v < R->nvars(); ++v)
        if (dropped[v]) {
            into[v] = long(vars.size());
            vars.push_back(R->vars[v]);
        }
    std::size_t nfirst = vars.size();
    std::vector<std::string> keep_names;
    for (std::size_t v = 0; v < R->nvars(); ++v)
        if (!dropped[v]) {
            into[v] = long(vars.size());
            vars.push_back(R->vars[v]);
            keep_names.push_back(R->vars[v]);
        }
    RingPtr perm = make_ring(R->char_p, vars);
    RingPtr sub = make_ring(R->char_p, keep_names);
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.transport(perm, into));
    auto gb = buchberger(perm, gens, MonomialOrder::block(nfirst));
    std::vector<long> back(perm->nvars(), -1);
    for (std::size_t v = nfirst; v < perm->nvars(); ++v) back[v] = long(v - nfirst);
    return Ideal(sub, filter_restrict(gb, nfirst, sub, back));
}

Ideal saturation(const Ideal& I, const Poly& f) {
    const RingPtr& R = I.ring();
    require_same_ring(*R, *f.ring(), "saturation");
    ExtendedRing ext = extend_ring(R, {"y"});
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.transport(ext.ring, ext.into));
    Poly y = Poly::variable(ext.ring, 0);
    gens.push_back(Poly::constant(ext.ring, 1) - y * f.transport(ext.ring, ext.into));
    auto gb = buchberger(ext.ring, gens, MonomialOrder::block(1));
    return Ideal(R, filter_restrict(gb, 1, R, ext.back));
}

bool radical_member(const Poly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const RingPtr& R = I.ring();
    require_same_ring(*R, *f.ring(), "radical_member");
    ExtendedRing ext = extend_ring(R, {"y"});
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.transport(ext.ring, ext.into));
    Poly y = Poly::variable(ext.ring, 0);
    gens.push_back(Poly::constant(ext.ring, 1) - y * f.transport(ext.ring, ext.into));
    auto gb = buchberger(ext.ring, gens);
    return gb.size() == 1 && gb.front().is_constant();
}

bool ideal_equal_radical(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.gens())
        if (!radical_member(g, b)) return false;
    for (const auto& g : b.gens())
        if (!radical_member(g, a)) return false;
    return true;
}

}  // namespace foliate
