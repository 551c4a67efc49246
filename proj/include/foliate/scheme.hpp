#pragma once
/* Affine schemes with a distinguished vector field, open sets, and the
 * associated invariant-set calculus.
 *
 * A scheme is Spec(R/rel) with a derivation that descends to the quotient
 * (checked at construction).  Open sets are stored by a complement ideal in
 * the ambient ring and compared up to radical relative to the relations:
 * U = X \ V(I).
 *
 * u_delta(U) is the complement of V(<I>), where <I> is the differential
 * closure of I + rel.  V(<I>) is the largest invariant closed set inside
 * V(I); dually u_delta(U) is the smallest invariant open containing U (the
 * points whose trajectory closure meets U).
 *
 * The lattice maps: union of opens <-> ideal sum; intersection of opens
 * <-> ideal product (same radical as the ideal intersection, cheaper).
 */

#include "foliate/diffideal.hpp"

namespace foliate {

struct AffineDiffScheme {
    RingPtr ring;
    Ideal relations;  // may have no generators (free polynomial ring)
    Derivation der;
};

/* Validates that the derivation maps every relation generator back into the
   relations ideal. */
AffineDiffScheme make_affine(RingPtr ring, std::vector<Poly> relations, Derivation der);

/* Prime ideal (user-asserted) containing the relations: is it differential?
   Works modulo the relations, i.e. on the quotient. */
bool is_leaf(const AffineDiffScheme& X, const Ideal& P);

struct OpenSet {
    Ideal complement;  // U = X \ V(complement)
};

OpenSet make_open(const AffineDiffScheme& X, Ideal complement);
OpenSet basic_open(const AffineDiffScheme& X, const Poly& f);  // D(f)

/* Equality of open sets up to radical (relative to the relations). */
bool open_equal(const AffineDiffScheme& X, const OpenSet& a, const OpenSet& b);

OpenSet open_union(const AffineDiffScheme& X, const OpenSet& a, const OpenSet& b);
OpenSet open_intersect(const AffineDiffScheme& X, const OpenSet& a, const OpenSet& b);

struct UDeltaResult {
    OpenSet u_delta;          // invariant open: complement of the closure ideal
    ClosureResult closure;    // differential closure of complement + relations
};

/* Largest invariant closed set inside V(I) is V(<I + rel>); u_delta is its
   open complement. */
UDeltaResult u_delta(const AffineDiffScheme& X, const OpenSet& U);
Ideal greatest_invariant_closed(const AffineDiffScheme& X, const Ideal& I);

/* U invariant iff sqrt(I) = sqrt(<I>). */
bool is_invariant_open(const AffineDiffScheme& X, const OpenSet& U);

struct TopologyLawsReport {
    bool union_law = false;         // (U1 u U2 u ...)^delta == union of U_i^delta
    bool intersection_law = false;  // same for the (finite) intersection
};

TopologyLawsReport cf_topology_laws(const AffineDiffScheme& X,
                                    const std::vector<OpenSet>& family);

}  // namespace foliate
