#include "foliate/scheme.hpp"

#include "foliate/error.hpp"
#include "foliate/format.hpp"

namespace foliate {

namespace {

void require_scheme_ideal(const AffineDiffScheme& X, const Ideal& I, const char* where) {
    if (!I.ring()) throw Error(std::string(where) + ": empty ideal handle");
    require_same_ring(*X.ring, *I.ring(), where);
}

/* Complement ideal of U relative to the scheme: V(I) n X = V(I + rel). */
Ideal relative_complement(const AffineDiffScheme& X, const OpenSet& U) {
    return ideal_sum(U.complement, X.relations);
}

}  // namespace

AffineDiffScheme make_affine(RingPtr ring, std::vector<Poly> relations, Derivation der) {
    if (!ring) throw Error("make_affine: null ring");
    require_same_ring(*ring, *der.ring, "make_affine");
    for (const auto& r : relations) require_same_ring(*ring, *r.ring(), "make_affine");

    Ideal rel(ring, relations);
    for (const auto& r : rel.gens()) {
        if (!ideal_member(apply_derivation(der, r), rel))
            throw Error("make_affine: derivation does not preserve the relations ideal "
                        "(d applied to \"" + print_poly(r) + "\" is not in it)");
    }
    der.relations = std::move(relations);
    return AffineDiffScheme{std::move(ring), std::move(rel), std::move(der)};
}

bool is_leaf(const AffineDiffScheme& X, const Ideal& P) {
    require_scheme_ideal(X, P, "is_leaf");
    if (!ideal_contains(P, X.relations))
        throw Error("is_leaf: ideal does not contain the scheme relations");
    return is_differential_ideal(P, X.der);
}

OpenSet make_open(const AffineDiffScheme& X, Ideal complement) {
    require_scheme_ideal(X, complement, "make_open");
    return OpenSet{std::move(complement)};
}

OpenSet basic_open(const AffineDiffScheme& X, const Poly& f) {
    require_same_ring(*X.ring, *f.ring(), "basic_open");
    return OpenSet{Ideal(X.ring, {f})};
}

bool open_equal(const AffineDiffScheme& X, const OpenSet& a, const OpenSet& b) {
    return ideal_equal_radical(relative_complement(X, a), relative_complement(X, b));
}

OpenSet open_union(const AffineDiffScheme& X, const OpenSet& a, const OpenSet& b) {
    require_scheme_ideal(X, a.complement, "open_union");
    require_scheme_ideal(X, b.complement, "open_union");
    return OpenSet{ideal_sum(a.complement, b.complement)};
}

OpenSet open_intersect(const AffineDiffScheme& X, const OpenSet& a, const OpenSet& b) {
    require_scheme_ideal(X, a.complement, "open_intersect");
    require_scheme_ideal(X, b.complement, "open_intersect");
    return OpenSet{ideal_product(a.complement, b.complement)};
}

UDeltaResult u_delta(const AffineDiffScheme& X, const OpenSet& U) {
    require_scheme_ideal(X, U.complement, "u_delta");
    ClosureResult cr = diff_closure(relative_complement(X, U), X.der);
    return UDeltaResult{OpenSet{cr.closure}, std::move(cr)};
}

Ideal greatest_invariant_closed(const AffineDiffScheme& X, const Ideal& I) {
    require_scheme_ideal(X, I, "greatest_invariant_closed");
    return diff_closure(ideal_sum(I, X.relations), X.der).closure;
}

bool is_invariant_open(const AffineDiffScheme& X, const OpenSet& U) {
    return open_equal(X, U, u_delta(X, U).u_delta);
}

TopologyLawsReport cf_topology_laws(const AffineDiffScheme& X,
                                    const std::vector<OpenSet>& family) {
    if (family.empty()) return TopologyLawsReport{true, true};

    std::vector<OpenSet> flowed;
    flowed.reserve(family.size());
    for (const auto& U : family) flowed.push_back(u_delta(X, U).u_delta);

    OpenSet uni = family[0];
    OpenSet inter = family[0];
    OpenSet uni_f = flowed[0];
    OpenSet inter_f = flowed[0];
    for (std::size_t i = 1; i < family.size(); ++i) {
        uni = open_union(X, uni, family[i]);
        inter = open_intersect(X, inter, family[i]);
        uni_f = open_union(X, uni_f, flowed[i]);
        inter_f = open_intersect(X, inter_f, flowed[i]);
    }

    TopologyLawsReport rep;
    rep.union_law = open_equal(X, u_delta(X, uni).u_delta, uni_f);
    rep.intersection_law = open_equal(X, u_delta(X, inter).u_delta, inter_f);
    return rep;
}

}  // namespace foliate
