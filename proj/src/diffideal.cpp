#include "foliate/diffideal.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "foliate/linalg.hpp"

namespace foliate {

bool is_differential_ideal(const Ideal& I, const Derivation& d) {
    const auto& gb = I.groebner_basis();
    for (const auto& g : gb)
        if (!normal_form(apply_derivation(d, g), gb).is_zero()) return false;
    return true;
}

bool is_differential_ideal_hs(const Ideal& I, const HigherDerivation& hs) {
    const auto& gb = I.groebner_basis();
    for (const auto& g : gb)
        for (unsigned i = 1; i <= hs.order; ++i)
            if (!normal_form(hs_apply(hs, i, g), gb).is_zero()) return false;
    return true;
}

ClosureResult diff_closure(const Ideal& I, const Derivation& d, unsigned max_rounds) {
    require_same_ring(*I.ring(), *d.ring, "diff_closure");
    Ideal cur = I;
    for (unsigned round = 0; round < max_rounds; ++round) {
        const auto& gb = cur.groebner_basis();
        std::vector<Poly> fresh;
        for (const auto& g : gb) {
            Poly dg = normal_form(apply_derivation(d, g), gb);
            if (!dg.is_zero()) fresh.push_back(std::move(dg));
        }
        if (fresh.empty()) return ClosureResult{cur, round, true};
        std::vector<Poly> gens = gb;
        gens.insert(gens.end(), fresh.begin(), fresh.end());
        cur = Ideal(I.ring(), std::move(gens));
    }
    return ClosureResult{cur, max_rounds, false};
}

namespace {

/* All monomials of total degree <= cap, in a deterministic order. */
void enumerate_monomials(std::size_t nvars, unsigned cap, Expv& cur, std::size_t at,
                         unsigned used, std::vector<Expv>& out) {
    if (at == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e + used <= cap; ++e) {
        cur[at] = e;
        enumerate_monomials(nvars, cap, cur, at + 1, used + e, out);
    }
    cur[at] = 0;
}

std::vector<Expv> monomials_up_to(std::size_t nvars, unsigned cap) {
    std::vector<Expv> out;
    Expv cur(nvars, 0);
    enumerate_monomials(nvars, cap, cur, 0, 0, out);
    return out;
}

/* One descent: span the degree-<= D slice of J by monomial multiples of its
   basis, impose that every supplied operator image lands in J, and return
   the ideal generated by the kernel.  Operators must be linear maps. */
Ideal descent_step(const Ideal& J, unsigned D,
                   const std::vector<std::function<Poly(const Poly&)>>& ops,
                   bool parallel) {
    const RingPtr& R = J.ring();
    const auto& gb = J.groebner_basis();
    if (gb.empty()) return J;

    // spanning set {m*g}
    std::vector<Poly> span;
    for (const auto& g : gb) {
        long dg = g.degree();
        if (dg > long(D)) continue;
        for (const auto& m : monomials_up_to(R->nvars(), D - unsigned(dg)))
            span.push_back(Poly::monomial(R, m, 1) * g);
    }
    if (span.empty()) return Ideal(R, {});

    // linear conditions: coefficients of NF(op(span_t)) for every op
    std::map<Expv, std::size_t> colidx;  // condition monomial -> row
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> cols(span.size());
    for (std::size_t t = 0; t < span.size(); ++t) {
        for (std::size_t o = 0; o < ops.size(); ++o) {
            Poly img = normal_form(ops[o](span[t]), gb);
            for (const auto& [e, c] : img.terms()) {
                Expv key = e;
                key.push_back(unsigned(o));  // separate blocks per operator
                auto [it, fresh] = colidx.emplace(std::move(key), colidx.size());
                cols[t].emplace_back(it->second, c);
            }
        }
    }

    Matrix M(R, colidx.size(), span.size());
    for (std::size_t t = 0; t < span.size(); ++t)
        for (const auto& [row, c] : cols[t]) M.at(row, t) = c;

    auto kernel = kernel_basis(M, parallel);
    std::vector<Poly> gens;
    for (const auto& v : kernel) {
        Poly f(R);
        for (std::size_t t = 0; t < span.size(); ++t)
            if (v[t] != 0) f += span[t].scaled(v[t]);
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    return Ideal(R, std::move(gens));
}

TrajectoryResult run_descent(const Ideal& p, unsigned D, unsigned rounds,
                             const std::vector<std::function<Poly(const Poly&)>>& ops,
                             const std::function<bool(const Ideal&)>& differential,
                             bool parallel) {
    TrajectoryResult res;
    res.deg_bound = D;
    Ideal cur = p;
    for (unsigned k = 0; k < rounds; ++k) {
        Ideal nxt = descent_step(cur, D, ops, parallel);
        if (ideal_equal(nxt, cur)) {
            res.fixed_point = true;
            res.rounds_used = k;
            cur = nxt;
            break;
        }
        cur = nxt;
        res.rounds_used = k + 1;
    }
    res.ideal = cur;
    res.differential = differential(cur);
    res.status = (res.fixed_point && res.differential) ? TrajStatus::Exact
                                                       : TrajStatus::BoundedApprox;
    return res;
}

}  // namespace

TrajectoryResult trajectory(const Ideal& p, const Derivation& d,
                            std::optional<unsigned> deg, unsigned rounds, bool parallel) {
    require_same_ring(*p.ring(), *d.ring, "trajectory");
    unsigned D = deg.value_or(default_traj_degree(p));
    std::vector<std::function<Poly(const Poly&)>> ops;
    ops.push_back([&d](const Poly& f) { return apply_derivation(d, f); });
    return run_descent(p, D, rounds, ops,
                       [&d](const Ideal& J) { return is_differential_ideal(J, d); },
                       parallel);
}

TrajectoryResult hs_trajectory(const Ideal& p, const HigherDerivation& hs,
                               std::optional<unsigned> deg, unsigned rounds,
                               bool parallel) {
    require_same_ring(*p.ring(), *hs.ring, "hs_trajectory");
    unsigned D = deg.value_or(default_traj_degree(p));
    std::vector<std::function<Poly(const Poly&)>> ops;
    for (unsigned i = 1; i <= hs.order; ++i)
        ops.push_back([&hs, i](const Poly& f) { return hs_apply(hs, i, f); });
    return run_descent(p, D, rounds, ops,
                       [&hs](const Ideal& J) { return is_differential_ideal_hs(J, hs); },
                       parallel);
}

RingMap make_ring_map(RingPtr src, RingPtr dst, std::vector<Poly> images) {
    if (images.size() != src->nvars())
        throw Error("ring map needs one image per source variable");
    if (src->char_p != dst->char_p) throw Error("ring map: field mismatch");
    for (const auto& im : images) require_same_ring(*im.ring(), *dst, "ring map image");
    return RingMap{std::move(src), std::move(dst), std::move(images)};
}

Poly apply_map(const RingMap& phi, const Poly& f) {
    require_same_ring(*phi.src, *f.ring(), "apply_map");
    return f.substitute(phi.dst, phi.images);
}

bool map_is_differential(const RingMap& phi, const Derivation& dsrc,
                         const Derivation& ddst) {
    require_same_ring(*phi.src, *dsrc.ring, "map_is_differential");
    require_same_ring(*phi.dst, *ddst.ring, "map_is_differential");
    for (std::size_t v = 0; v < phi.src->nvars(); ++v) {
        Poly lhs = apply_map(phi, dsrc.images[v]);
        Poly rhs = apply_derivation(ddst, phi.images[v]);
        if (lhs != rhs) return false;
    }
    return true;
}

Ideal preimage(const RingMap& phi, const Ideal& Q) {
    require_same_ring(*phi.dst, *Q.ring(), "preimage");
    // combined ring: dst variables first (to be eliminated), then src copies
    std::vector<std::string> vars = phi.dst->vars;
    std::vector<std::string> src_names;
    for (const auto& s : phi.src->vars) {
        std::string name = s;
        unsigned n = 0;
        while (std::find(vars.begin(), vars.end(), name) != vars.end())
            name = s + "_" + std::to_string(n++);
        vars.push_back(name);
        src_names.push_back(name);
    }
    RingPtr comb = make_ring(phi.dst->char_p, vars);
    std::size_t ndst = phi.dst->nvars();

    std::vector<long> dst_into(ndst);
    for (std::size_t v = 0; v < ndst; ++v) dst_into[v] = long(v);
    std::vector<Poly> gens;
    for (const auto& g : Q.gens()) gens.push_back(g.transport(comb, dst_into));
    for (std::size_t v = 0; v < phi.src->nvars(); ++v)
        gens.push_back(Poly::variable(comb, ndst + v) -
                       phi.images[v].transport(comb, dst_into));

    auto gb = buchberger(comb, gens, MonomialOrder::block(ndst));
    std::vector<long> back(comb->nvars(), -1);
    for (std::size_t v = 0; v < phi.src->nvars(); ++v) back[ndst + v] = long(v);
    std::vector<Poly> kept;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [e, c] : g.terms())
            for (std::size_t v = 0; v < ndst && pure; ++v)
                if (e[v]) pure = false;
        if (pure) kept.push_back(g.transport(phi.src, back));
    }
    return Ideal(phi.src, std::move(kept));
}

FunctorialityReport functoriality_check(const RingMap& phi, const Derivation& dsrc,
                                        const Derivation& ddst, const Ideal& Q,
                                        std::optional<unsigned> deg, unsigned rounds) {
    if (!map_is_differential(phi, dsrc, ddst))
        throw Error("functoriality_check: morphism does not intertwine the derivations");
    FunctorialityReport rep;
    rep.traj_dst = trajectory(Q, ddst, deg, rounds);
    Ideal pulled = preimage(phi, Q);
    rep.traj_src = trajectory(pulled, dsrc, deg, rounds);
    rep.both_exact = rep.traj_dst.status == TrajStatus::Exact &&
                     rep.traj_src.status == TrajStatus::Exact;
    if (!rep.both_exact) {
        rep.verdict = Tri::Inconclusive;
        return rep;
    }
    Ideal pulled_traj = preimage(phi, rep.traj_dst.ideal);
    rep.verdict = ideal_equal(pulled_traj, rep.traj_src.ideal) ? Tri::True : Tri::False;
    return rep;
}

}  // namespace foliate
